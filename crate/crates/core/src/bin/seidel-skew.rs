use std::io::Write;

fn main() {
    let out = seidel_skew::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    std::io::stdout()
        .write_all(out.stdout.as_bytes())
        .expect("stdout");
    std::io::stderr()
        .write_all(out.stderr.as_bytes())
        .expect("stderr");
    std::process::exit(out.code);
}
