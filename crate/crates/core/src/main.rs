use contact_lie::cli::run_args;

fn main() {
    let out = run_args(std::env::args_os());
    print!("{}", out.report);
    std::process::exit(out.code);
}
