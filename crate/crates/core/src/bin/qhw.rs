use clap::Parser;

fn main() {
    let cli = match qhw::app::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { qhw::app::EXIT_PARSE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = qhw::app::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
