use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let report = redlink_cli::run(&argv);
    // A closed pipe downstream is not an error worth panicking over.
    let _ = writeln!(std::io::stdout(), "{}", report.text);
    std::process::exit(report.exit);
}
