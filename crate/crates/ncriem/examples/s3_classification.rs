//! Certify the classification of invariant connections on S3 for several
//! conjunctions of predicates: every known family is verified point by point
//! and random off-family samples confirm the conjunction fails generically.

use ncriem::groupconn::classify::{classify_s3, ClassifyConfig, Condition};

fn run(title: &str, conds: &[Condition]) {
    let cfg = ClassifyConfig { family_samples: 25, off_family_samples: 50, ..Default::default() };
    let report = classify_s3(conds, &cfg).expect("supported condition set");
    println!("== {title} ==");
    for fam in &report.families {
        let mark = if fam.informational {
            "~"
        } else if fam.pass {
            "+"
        } else {
            "!"
        };
        println!("  [{mark}] {} ({})", fam.name, fam.paper_ref);
    }
    println!(
        "  off-family: {} random points, all fail: {}",
        report.off_family_samples.count, report.off_family_samples.all_failed
    );
}

fn main() {
    use Condition::*;
    run("invertible sigma with braid relations", &[Braid]);
    run("torsion-free (equivalently torsion-compatible)", &[TorsionFree, TorsionCompatible]);
    run("torsion-free + star-compatible", &[TorsionFree, StarCompatible]);
    run(
        "generalized Levi-Civita: torsion-free + cotorsion-free + star",
        &[TorsionFree, CotorsionFree, StarCompatible],
    );
    run("metric-preserving + star-compatible", &[Metric, StarCompatible]);
    run("metric + torsion-free + star (empty)", &[Metric, TorsionFree, StarCompatible]);
    run("braided + metric + star", &[Braid, Metric, StarCompatible]);
    println!("\nlegend: [+] certified, [!] failed, [~] informational/flagged");
}
