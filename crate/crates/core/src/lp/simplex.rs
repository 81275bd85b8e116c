use std::io::Write;

use super::rational::Rational;

/// `max objective·x  s.t.  a·x = b,  x >= 0` with integer data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub a: Vec<Vec<i64>>,
    pub b: Vec<i64>,
    pub objective: Vec<i64>,
    pub names: Vec<String>,
}

impl LinearProgram {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>, objective: Vec<i64>) -> Self {
        let names = (0..objective.len()).map(|j| format!("x{j}")).collect();
        let lp = LinearProgram {
            a,
            b,
            objective,
            names,
        };
        lp.check_dimensions();
        lp
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.columns(), "one name per column");
        self.names = names;
        self
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn columns(&self) -> usize {
        self.objective.len()
    }

    fn check_dimensions(&self) {
        assert_eq!(self.a.len(), self.b.len(), "row count mismatch");
        assert!(
            self.a.iter().all(|r| r.len() == self.objective.len()),
            "ragged constraint matrix"
        );
    }

    /// Exact check of `a·x = b` and `x >= 0`.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.columns()
            && x.iter().all(|v| !v.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, &bi)| {
                let lhs = row
                    .iter()
                    .zip(x)
                    .filter(|(&c, _)| c != 0)
                    .fold(Rational::zero(), |acc, (&c, v)| {
                        &acc + &(&Rational::from(c) * v)
                    });
                lhs == Rational::from(bi)
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Basic optimal solution, present iff `status == Optimal`.
    pub vertex: Option<Vec<Rational>>,
    pub objective_value: Option<Rational>,
    pub pivots: usize,
}

/// Two-phase primal simplex on a dense exact tableau with Bland's rule.
pub fn solve_lp(p: &LinearProgram) -> LpOutcome {
    Tableau::new(p).run(None)
}

/// As [`solve_lp`], dumping every tableau to `trace`.
pub fn solve_lp_traced(p: &LinearProgram, trace: &mut dyn Write) -> LpOutcome {
    Tableau::new(p).run(Some(trace))
}

struct Tableau<'a> {
    lp: &'a LinearProgram,
    /// Rows of `[A | I_art | rhs]`.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    n: usize,
    width: usize,
    pivots: usize,
}

impl<'a> Tableau<'a> {
    fn new(lp: &'a LinearProgram) -> Self {
        lp.check_dimensions();
        let m = lp.rows();
        let n = lp.columns();
        let width = n + m + 1;
        let rows = (0..m)
            .map(|i| {
                let sign = if lp.b[i] < 0 { -1 } else { 1 };
                let mut row = vec![Rational::zero(); width];
                for (j, &v) in lp.a[i].iter().enumerate() {
                    if v != 0 {
                        row[j] = Rational::from(sign * v);
                    }
                }
                row[n + i] = Rational::one();
                row[width - 1] = Rational::from(sign * lp.b[i]);
                row
            })
            .collect();
        Tableau {
            lp,
            rows,
            basis: (n..n + m).collect(),
            n,
            width,
            pivots: 0,
        }
    }

    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width - 1]
    }

    fn run(mut self, mut trace: Option<&mut dyn Write>) -> LpOutcome {
        let n = self.n;

        // Phase I: maximize -sum(artificials).
        let mut cost = vec![0i64; self.width - 1];
        for c in &mut cost[n..] {
            *c = -1;
        }
        self.iterate(&cost, n, &mut trace, "phase I");
        let infeasibility = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(_, &bv)| bv >= n)
            .fold(Rational::zero(), |acc, (i, _)| &acc + self.rhs(i));
        if infeasibility.is_positive() {
            return LpOutcome {
                status: LpStatus::Infeasible,
                vertex: None,
                objective_value: None,
                pivots: self.pivots,
            };
        }
        self.drive_out_artificials();

        // Phase II on the original objective.
        let mut cost = vec![0i64; self.width - 1];
        cost[..n].copy_from_slice(&self.lp.objective);
        if !self.iterate(&cost, n, &mut trace, "phase II") {
            return LpOutcome {
                status: LpStatus::Unbounded,
                vertex: None,
                objective_value: None,
                pivots: self.pivots,
            };
        }

        let mut x = vec![Rational::zero(); n];
        for (i, &bv) in self.basis.iter().enumerate() {
            debug_assert!(bv < n, "artificial left in basis after phase I");
            x[bv] = self.rhs(i).clone();
        }
        let value = x
            .iter()
            .zip(&self.lp.objective)
            .filter(|(_, &c)| c != 0)
            .fold(Rational::zero(), |acc, (v, &c)| {
                &acc + &(v * &Rational::from(c))
            });
        LpOutcome {
            status: LpStatus::Optimal,
            vertex: Some(x),
            objective_value: Some(value),
            pivots: self.pivots,
        }
    }

    /// Bland-rule iterations over columns `< enter_limit`. Returns false on
    /// an unbounded direction.
    fn iterate(
        &mut self,
        cost: &[i64],
        enter_limit: usize,
        trace: &mut Option<&mut dyn Write>,
        phase: &str,
    ) -> bool {
        loop {
            if let Some(w) = trace.as_deref_mut() {
                self.dump(w, phase);
            }
            let Some(col) = (0..enter_limit).find(|&j| self.reduced_cost(cost, j).is_positive())
            else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return false,
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }

    fn reduced_cost(&self, cost: &[i64], j: usize) -> Rational {
        if self.basis.contains(&j) {
            return Rational::zero();
        }
        let mut r = Rational::from(cost[j]);
        for (i, &bv) in self.basis.iter().enumerate() {
            let cb = cost[bv];
            let a = &self.rows[i][j];
            if cb != 0 && !a.is_zero() {
                r = &r - &(a * &Rational::from(cb));
            }
        }
        r
    }

    fn pivot(&mut self, row: usize, col: usize) {
        self.pivots += 1;
        let p = self.rows[row][col].clone();
        if p != Rational::one() {
            for v in self.rows[row].iter_mut() {
                if !v.is_zero() {
                    *v = &*v / &p;
                }
            }
        }
        let support: Vec<usize> = (0..self.width)
            .filter(|&j| !self.rows[row][j].is_zero())
            .collect();
        let pivot_row = std::mem::take(&mut self.rows[row]);
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for &j in &support {
                r[j] = &r[j] - &(&factor * &pivot_row[j]);
            }
        }
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }

    /// Pivots zero-level artificials out of the basis; rows where that is
    /// impossible are linearly dependent and get dropped.
    fn drive_out_artificials(&mut self) {
        let n = self.n;
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < n {
                i += 1;
                continue;
            }
            match (0..n).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn dump(&self, w: &mut dyn Write, phase: &str) {
        let _ = writeln!(w, "-- {phase} (pivots so far: {})", self.pivots);
        for (i, r) in self.rows.iter().enumerate() {
            let name = self
                .lp
                .names
                .get(self.basis[i])
                .cloned()
                .unwrap_or_else(|| format!("a{}", self.basis[i] - self.n));
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(w, "{name:>8} | {}", cells.join(" "));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(a: Vec<Vec<i64>>, b: Vec<i64>, c: Vec<i64>) -> LinearProgram {
        LinearProgram::new(a, b, c)
    }

    #[test]
    fn single_row_optimal() {
        let out = solve_lp(&lp(vec![vec![1, 1]], vec![1], vec![1, 0]));
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.vertex.unwrap(), vec![Rational::one(), Rational::zero()]);
        assert_eq!(out.objective_value.unwrap(), Rational::one());
    }

    #[test]
    fn negative_rhs_is_infeasible() {
        let out = solve_lp(&lp(vec![vec![1, 1]], vec![-1], vec![1, 0]));
        assert_eq!(out.status, LpStatus::Infeasible);
        assert!(out.vertex.is_none());
    }

    #[test]
    fn unbounded_ray() {
        // x0 - x1 = 0, maximize x0.
        let out = solve_lp(&lp(vec![vec![1, -1]], vec![0], vec![1, 0]));
        assert_eq!(out.status, LpStatus::Unbounded);
    }

    #[test]
    fn dependent_rows_are_dropped() {
        let p = lp(
            vec![vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]],
            vec![1, 2, 1],
            vec![1, 0, 1],
        );
        let out = solve_lp(&p);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.objective_value.clone().unwrap(), Rational::from(2));
        assert!(p.is_feasible_point(out.vertex.as_ref().unwrap()));
    }

    #[test]
    fn fractional_vertex_is_reported_exactly() {
        // Triangle edge LP: x01 + x02 = 1, x01 + x12 = 1, x02 + x12 = 1.
        let p = lp(
            vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]],
            vec![1, 1, 1],
            vec![1, 1, 1],
        );
        let out = solve_lp(&p);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.vertex.unwrap(), vec![Rational::new(1, 2); 3]);
    }

    #[test]
    fn trace_writes_tableaus() {
        let mut buf = Vec::new();
        solve_lp_traced(&lp(vec![vec![1, 1]], vec![1], vec![1, 0]), &mut buf);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("phase I"));
        assert!(text.contains("phase II"));
    }
}
