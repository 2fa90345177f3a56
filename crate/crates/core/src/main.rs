fn main() {
    std::process::exit(icosa::cli::main_entry());
}
