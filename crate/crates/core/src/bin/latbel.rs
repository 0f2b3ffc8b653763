use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match latbel::shell::main_with_args(std::env::args_os()) {
        Ok((outcome, json)) => {
            let text = outcome.render(json);
            let mut out = if outcome.code == 2 && !json {
                Box::new(std::io::stderr()) as Box<dyn Write>
            } else {
                Box::new(std::io::stdout())
            };
            let _ = out.write_all(text.as_bytes());
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            let _ = e.print();
            ExitCode::from(if e.use_stderr() { 2 } else { 0 })
        }
    }
}
