fn main() -> ! {
    rhorep::cli::main_entry()
}
