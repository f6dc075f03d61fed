fn main() { std::process::exit(cops_robbers::cli::main()) }
