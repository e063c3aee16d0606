fn main() {
    let result = turan_core::cli::run(std::env::args_os());
    if result.status == turan_core::cli::Status::Error {
        if let Some(message) = result.payload["message"].as_str() {
            eprintln!("{message}");
        }
    }
    println!("{}", result.to_json());
    std::process::exit(result.exit_code());
}
