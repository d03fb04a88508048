fn main() { std::process::exit(lerchkit::cli::run(std::env::args_os())); }
