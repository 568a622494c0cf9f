fn main() {
    std::process::exit(qcprog::run(std::env::args_os()));
}
