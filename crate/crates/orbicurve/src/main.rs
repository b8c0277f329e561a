fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (report, code) = orbicurve::cli::run(&args);
    if !report.is_empty() {
        if code == 2 {
            eprintln!("{report}");
        } else {
            println!("{report}");
        }
    }
    std::process::exit(code);
}
