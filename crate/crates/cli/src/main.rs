use std::io::Write;

fn main() {
    let out = ideform_cli::run(std::env::args_os().skip(1));
    let _ = std::io::stdout().write_all(out.output.as_bytes());
    std::process::exit(out.code);
}
