use clap::Parser;

fn main() {
    let cli = ueb_cli::Cli::parse();
    let mut stdout = std::io::stdout();
    let code = ueb_cli::run(cli, &mut stdout);
    std::process::exit(code);
}
