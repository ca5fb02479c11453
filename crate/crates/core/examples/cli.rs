//! The command-line front end driven in-process.

use supvar::cli::run_with;

fn main() {
    let commands: [&[&str]; 5] = [
        &["supvar", "atyp", "2", "1", "0,0|0"],
        &["supvar", "--output", "table", "support", "1", "1", "0|0", "--compare"],
        &["supvar", "--output", "table", "cohom", "2", "2", "--pmax", "4"],
        &["supvar", "--output", "table", "kacext", "1", "1", "0|0", "--pmax", "4"],
        &["supvar", "--output", "table", "divcheck", "2", "1", "1,0|0"],
    ];
    for args in commands {
        let (out, err, code) = run_with(args.iter().copied(), None);
        println!("$ {}  (exit {code})\n{out}{err}", args.join(" "));
    }
}
