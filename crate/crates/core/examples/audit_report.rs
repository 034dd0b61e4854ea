//! Runs the theorem audit on a few complexes and prints the outcome of every
//! applicable check.

use facenum::audit::{run_audit, AuditOptions, Verdict};
use facenum::constructions::{cyclic_boundary, klee_novik_boundary, stacked_cross_polytopal};
use facenum::FieldSpec;

fn main() -> facenum::Result<()> {
    let opts = AuditOptions { fields: vec![FieldSpec::Rationals, FieldSpec::gf2()], ..Default::default() };
    for (name, c) in [
        ("C_4(8)", cyclic_boundary(4, 8)?),
        ("torus", klee_novik_boundary(1, 4)?),
        ("stacked cross-polytopal k=2 d=4", stacked_cross_polytopal(2, 4)?.0),
    ] {
        let report = run_audit(&c, &opts)?;
        println!("{name}: exit code {}", report.exit_code(false));
        for check in report.checks.iter().filter(|c| c.verdict != Verdict::Skipped) {
            let field = check.field.map_or(String::new(), |f| format!(" [{f}]"));
            let slack = check.slack.as_ref().map_or("-".into(), |s| s.to_string());
            println!("  {:<22}{:<8} {:?} slack {slack}", check.id, field, check.verdict);
        }
    }
    Ok(())
}
