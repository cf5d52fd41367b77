//! Drives the command-line front end in-process.

use torsionlab::cli::run_from;

fn main() {
    let runs: [&[&str]; 4] = [
        &["torsionlab", "torsion", "--torus", "5,2,0.3", "--format", "json"],
        &["torsionlab", "alexander", "--dsl", "gens: a, b | rel: a*b*a*B*A*B"],
        &["torsionlab", "check", "conjugation", "--trials", "25", "--seed", "4"],
        &["torsionlab", "scan", "--torus", "3,1", "--grid", "0:1:3"],
    ];
    for args in runs {
        let out = run_from(args);
        println!("$ {}  (exit {})", args[1..].join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
