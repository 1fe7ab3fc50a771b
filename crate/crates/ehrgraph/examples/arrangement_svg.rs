//! Counts curve arrangements on the tetrahedron and draws one of them.
//!
//! cargo run --example arrangement_svg -- out.svg

use ehrgraph::arrangements::{count_arrangements, emit_svg, load_triangulation, parse_point, realize_arrangement, TETRAHEDRON};

fn main() -> ehrgraph::Result<()> {
    let tri = load_triangulation(TETRAHEDRON)?;
    for t in 0..=4 {
        println!("t={t}: {}", count_arrangements(&tri, t)?);
    }
    let r = realize_arrangement(&tri, &parse_point(&tri, "2,2,2,2,2,2")?)?;
    println!("{} arcs forming {} curves", r.arcs.len(), r.curves.len());
    let svg = emit_svg(&tri, Some(&r), None)?;
    let out = std::env::args().nth(1).unwrap_or_else(|| "arrangement.svg".into());
    std::fs::write(&out, svg).expect("writable output");
    println!("wrote {out}");
    Ok(())
}
