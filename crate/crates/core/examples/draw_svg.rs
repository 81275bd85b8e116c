//! Writes SVG drawings of solved instances with the Clar set shaded and the
//! matching drawn bold.
//!
//!     cargo run --example draw_svg -- /tmp/clar-svg

use std::fs;
use std::path::PathBuf;

use clar::generators::named;
use clar::render::render_svg;
use clar::solver::{solve_clar, SolveOptions};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "clar-svg".into()));
    fs::create_dir_all(&dir)?;
    for name in ["coronene", "cube", "prism", "nanotube_cap_demo"] {
        let g = named(name).unwrap();
        let r = solve_clar(&g, &SolveOptions::default()).unwrap();
        let path = dir.join(format!("{name}.svg"));
        fs::write(&path, render_svg(&g, Some(&r.solution)))?;
        println!("{} (Clar number {})", path.display(), r.value);
    }
    Ok(())
}
