//! Checks a catalog suite end to end and prints the Markdown table.

use etap::catalog::Catalog;
use etap::cli::{table_markdown, verify_tables, Suite};
use etap::Result;

fn main() -> Result<()> {
    let suite = match std::env::args().nth(1).as_deref() {
        Some("real") => Suite::Real,
        Some("n1") => Suite::N1,
        Some("contact") => Suite::Contact,
        Some("all") => Suite::All,
        _ => Suite::Complex,
    };
    let t = verify_tables(suite, &Catalog::load()?);
    print!("{}", table_markdown(&t));
    std::process::exit(if t.failed == 0 { 0 } else { 1 });
}
