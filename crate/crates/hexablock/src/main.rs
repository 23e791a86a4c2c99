fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = hexablock::cli::run(&args);
    if !outcome.stdout.is_empty() {
        println!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
