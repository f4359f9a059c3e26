//! Builds `fixtures/actions.tsv`: the enumerated signatures for g = 4, 5, 6
//! restricted by the known orders of groups acting on those surfaces.

use mcgdim::{enumerate_all, hurwitz_ceiling, parse_signature, ActionRow, OrbifoldSignature};

/// Orders of groups acting with an orientable genus-0 quotient, at most two
/// cone points plus boundary circles, and `vcd(WF) = 1`.
fn allowed_sphere_orders(g: u32) -> &'static [u64] {
    match g {
        4 => &[12, 16, 24, 48],
        5 => &[16, 18, 20, 24, 36, 60, 72, 120],
        _ => &[],
    }
}

fn small_sphere_quotient(sig: &OrbifoldSignature) -> bool {
    sig.is_orientable()
        && sig.genus() == 0
        && sig.elliptic_count() + sig.boundary_count() <= 2
        && sig.vcd_weyl() == 1
}

fn keep(g: u32, order: u64, sig: &OrbifoldSignature) -> bool {
    match g {
        4 | 5 => {
            !small_sphere_quotient(sig) || order < 12 || allowed_sphere_orders(g).contains(&order)
        }
        6 => order <= 160 && order != 128,
        _ => true,
    }
}

/// Exact subgroup chain lengths known for specific rows.
fn known_lambda(g: u32, order: u64, sig: &OrbifoldSignature) -> Option<u32> {
    let known = [
        (4, 48, "(0; +; [-]; {(2,4,6)})"),
        (5, 120, "(0; +; [-]; {(2,4,5)})"),
    ];
    known
        .iter()
        .any(|&(kg, ko, text)| kg == g && ko == order && parse_signature(text).unwrap() == *sig)
        .then_some(5)
}

pub fn rows() -> Vec<ActionRow> {
    let mut out = Vec::new();
    for g in [4, 5, 6] {
        for (order, signature) in enumerate_all(g, hurwitz_ceiling(g)) {
            if keep(g, order, &signature) {
                let lambda_max = known_lambda(g, order, &signature);
                out.push(ActionRow {
                    genus: g,
                    order,
                    signature,
                    lambda_max,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.genus, b.order, a.signature.to_string()).cmp(&(
            b.genus,
            a.order,
            b.signature.to_string(),
        ))
    });
    out
}

pub fn render() -> String {
    let mut text = String::from(
        "# genus\torder\tsignature\tlambda_max\n\
         # Riemann-Hurwitz compatible quotients of N_4, N_5, N_6, limited to the\n\
         # group orders known to occur. Regenerate with\n\
         #   cargo run -p mcgdim --example gen_fixtures > crates/core/fixtures/actions.tsv\n",
    );
    for row in rows() {
        text.push_str(&row.to_tsv());
        text.push('\n');
    }
    text
}
