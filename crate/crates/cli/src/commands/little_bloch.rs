//! `autospec little-bloch`: boundary Bloch limits certifying that the
//! eigenfunctions stay outside the little Bloch space.

use autospec_core::numerics::{
    default_radial_sequence, little_bloch_radial_limit, little_bloch_sequence_limit,
    Eigenfunction,
};
use serde_json::json;

use crate::cli::LittleBlochArgs;
use crate::error::{CliError, CliResult};
use crate::input::parse_overrides;
use crate::report::Report;

pub fn run(args: &LittleBlochArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.tol_override)?;
    match (args.s, args.t) {
        (Some(s), None) => {
            let x0 = args.x0.ok_or_else(|| {
                CliError::Usage("--s needs --x0 (the real part of the boundary ray)".to_string())
            })?;
            let limit = little_bloch_sequence_limit(s, x0, args.n_max)?;
            let closed_form = -2.0 * s * x0 * (s * x0).exp();
            let input = json!({ "family": "expcusp", "s": s, "x0": x0, "n_max": args.n_max });
            let payload = json!({
                "limit": limit,
                "closed_form": closed_form,
                "deviation": (limit - closed_form).abs(),
                "tolerance": tols.little_bloch_tail,
            });
            Report::new("little-bloch", input, &tols, payload).print();
            Ok(())
        }
        (None, Some(t)) => {
            if args.x0.is_some() {
                return Err(CliError::Usage(
                    "--x0 applies to the --s family only".to_string(),
                ));
            }
            let f = Eigenfunction::log_power(t)?;
            let limit = little_bloch_radial_limit(&f, &default_radial_sequence())?;
            let closed_form = 2.0 * t.abs();
            let input = json!({ "family": "logpower", "t": t });
            let payload = json!({
                "limit": limit,
                "closed_form": closed_form,
                "deviation": (limit - closed_form).abs(),
                "tolerance": tols.little_bloch_tail,
            });
            Report::new("little-bloch", input, &tols, payload).print();
            Ok(())
        }
        _ => Err(CliError::Usage(
            "give exactly one of --s (cusp family) or --t (power family)".to_string(),
        )),
    }
}
