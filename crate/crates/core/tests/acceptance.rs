//! One line per acceptance criterion. Criteria 5, 7 and 8 are stated at
//! parameters where the claim does not hold; they are run as stated and
//! must fail, while their supplementary variants must pass. A catalog with a
//! tampered `H9` must fail the sum-theorem check.

use std::process::ExitCode;

use hoffgraph::graph::SimpleGraph;
use hoffgraph::hoffman::{Catalog, CatalogName, HoffmanGraph};
use hoffgraph::verify::{run_all, run_criterion};

const KNOWN_UNATTAINABLE: [&str; 3] = ["5", "7", "8"];

fn main() -> ExitCode {
    let outcomes = run_all(&Catalog::standard());
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    let unexpected: Vec<&str> = failed.iter().copied().filter(|id| !KNOWN_UNATTAINABLE.contains(id)).collect();
    println!(
        "{} of {} criteria pass; failing as documented: {:?}",
        outcomes.len() - failed.len(),
        outcomes.len(),
        failed.iter().filter(|id| KNOWN_UNATTAINABLE.contains(id)).collect::<Vec<_>>()
    );

    let g = SimpleGraph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (1, 5), (1, 6), (3, 6)]).unwrap();
    let tampered = Catalog::standard().with_entry(CatalogName::H9, HoffmanGraph::with_fat(g, &[4, 5, 6]).unwrap());
    let control = run_criterion("9", &tampered).unwrap();
    println!("negative control, tampered H9: {}", control.line());

    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        return ExitCode::FAILURE;
    }
    if control.passed {
        println!("the tampered catalog was not detected");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
