fn main() {
    let inv = isocert::cli::run(std::env::args_os());
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    std::process::exit(inv.code);
}
