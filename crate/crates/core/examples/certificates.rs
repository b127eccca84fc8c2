//! Checks the built-in certificates, or certificate files given as
//! arguments.
//!
//! ```sh
//! cargo run --example certificates
//! cargo run --example certificates -- cert.json
//! ```

use soberlens::symbolic::{builtin_certificates, certificate_check, parse_certificate};

fn main() -> soberlens::Result<()> {
    let paths: Vec<String> = std::env::args().skip(1).collect();
    let certs = if paths.is_empty() {
        builtin_certificates()
    } else {
        paths
            .iter()
            .map(|p| {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| soberlens::Error::Input(format!("{p}: {e}")))?;
                parse_certificate(&text)
            })
            .collect::<soberlens::Result<_>>()?
    };
    for cert in certs {
        println!("{}", serde_json::to_string(&cert)?);
        let v = certificate_check(&cert)?;
        println!(
            "  {} {}",
            if v.valid { "valid:" } else { "rejected:" },
            v.reason
        );
    }
    Ok(())
}
