//! The command-line front end driven in-process: the four output formats
//! and the on-disk cache.
use std::io;

use qfano::cli::run;

fn show(args: &[&str]) {
    let argv = std::iter::once("qfano").chain(args.iter().copied());
    let code = run(argv, &mut io::stdout(), &mut io::stderr());
    println!("[exit {code}]\n");
}

fn main() {
    for format in ["text", "json", "csv", "latex"] {
        show(&["betti", "--g", "3", "--kplane", "1", "--format", format]);
    }
    show(&["decomp", "--g", "3", "--i", "2"]);
    show(&["h", "--n", "4", "--m", "3", "--method", "all"]);
    show(&["h", "--n", "3", "--m", "3"]);

    let dir = std::env::temp_dir().join("qfano-example-cache");
    let dir = dir.to_str().unwrap();
    show(&[
        "--cache-dir",
        dir,
        "stalks",
        "--n",
        "4",
        "--i",
        "3",
        "--j",
        "1",
    ]);
    show(&[
        "--cache-dir",
        dir,
        "stalks",
        "--n",
        "4",
        "--i",
        "3",
        "--j",
        "1",
    ]);
}
