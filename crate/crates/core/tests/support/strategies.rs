use mcgdim::OrbifoldSignature;
use proptest::prelude::*;

fn orders(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(prop_oneof![2u32..=12, 2u32..=1_000_000], 0..=max_len)
}

/// Valid signatures with small shapes and arbitrary admissible orders.
pub fn signature() -> impl Strategy<Value = OrbifoldSignature> {
    (
        any::<bool>(),
        0u32..6,
        orders(5),
        prop::collection::vec(orders(4), 0..=4),
    )
        .prop_filter_map(
            "χ denominator too large",
            |(orientable, genus, elliptic, boundaries)| {
                let genus = if orientable { genus } else { genus.max(1) };
                OrbifoldSignature::new(orientable, genus, elliptic, boundaries).ok()
            },
        )
}

/// The same signature written with random spacing and element order.
pub fn noisy_text(sig: &OrbifoldSignature, seed: u64) -> String {
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut ws = || " ".repeat((next() % 3) as usize);
    let list = |xs: &[u32], ws: &mut dyn FnMut() -> String| {
        xs.iter()
            .map(|x| format!("{}{x}{}", ws(), ws()))
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut elliptic = sig.elliptic_orders().to_vec();
    elliptic.reverse();
    let ell = if elliptic.is_empty() {
        "-".to_string()
    } else {
        list(&elliptic, &mut ws)
    };
    let bounds = if sig.boundaries().is_empty() {
        "-".to_string()
    } else {
        sig.boundaries()
            .iter()
            .rev()
            .map(|b| {
                let mut c = b.corners().to_vec();
                let shift = c.len().min(1);
                c.rotate_left(shift);
                format!("({})", list(&c, &mut ws))
            })
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "{w}({w}{}{w};{w}{}{w};{w}[{ell}]{w};{w}{{{bounds}}}{w}){w}",
        sig.genus(),
        if sig.is_orientable() { '+' } else { '-' },
        w = ws()
    )
}
