use std::path::Path;

use p4geo::bounds::{bmy_ok, bogomolov_discriminant, txi_chern};
use p4geo::enumeration::{
    admissible_quartic_deg_z, enumerate_families, enumerate_irrational_scrolls,
    enumerate_quartic_conic_bundles, quartic_node_sheaf, DegZBranch, FamilyQuery,
};
use p4geo::invariants::{dpf_residual, noether_c2, sectional_genus_two_g_minus_2, slope};
use p4geo::scroll::{appendix_degrees as appendix, scroll_sanity_report};
use p4geo::segre::segre_configuration;
use p4geo::{Rational, SurfaceInvariants};
use serde_json::Value;

use crate::report::{Report, ReportFormat};
use crate::Finished;

fn ok(stdout: String) -> Result<Finished, String> {
    Ok(Finished { stdout, code: 0 })
}

pub fn families(
    m: i64,
    alpha: &str,
    hodge: bool,
    hk_positive: bool,
    format: ReportFormat,
) -> Result<Finished, String> {
    let alpha: Rational = alpha.trim().parse().map_err(|e| format!("--alpha {alpha:?}: {e}"))?;
    let query = FamilyQuery::new(m, alpha.clone())
        .map_err(|e| e.to_string())?
        .with_hodge(hodge)
        .with_hk_positive(hk_positive);
    let d_max = p4geo::bounds::d_alpha(m, &alpha).map_err(|e| e.to_string())?;
    let triples = enumerate_families(&query).map_err(|e| e.to_string())?;
    let mut r = Report::new(["d", "hk", "k2", "chi"]);
    for t in &triples {
        let k2 = query.k2_of(t.chi).expect("enumerated triples have integral K^2");
        r.push([t.d, t.hk, k2, t.chi]);
    }
    r.preamble.push(format!(
        "m = {m}, alpha = {alpha}, 5 <= d <= {d_max}, hodge {}, hk-positive {}: {} triples",
        on_off(hodge),
        on_off(hk_positive),
        triples.len()
    ));
    ok(r.render(format))
}

fn on_off(b: bool) -> &'static str {
    if b {
        "on"
    } else {
        "off"
    }
}

fn read_records(path: &Path) -> Result<Vec<SurfaceInvariants>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if text.trim().is_empty() {
        return Err(format!("{}: empty input", path.display()));
    }
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let items = match value {
        Value::Array(items) => items,
        one @ Value::Object(_) => vec![one],
        _ => return Err(format!("{}: expected a JSON object or array of objects", path.display())),
    };
    if items.is_empty() {
        return Err(format!("{}: no records", path.display()));
    }
    items
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            serde_json::from_value::<SurfaceInvariants>(v)
                .map_err(|e| format!("{}: record {i}: {e}", path.display()))
        })
        .collect()
}

struct Line {
    status: &'static str,
    constraint: &'static str,
    value: String,
    detail: String,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check_lines(inv: &SurfaceInvariants, m: Option<i64>) -> Result<Vec<Line>, String> {
    let (d, hk, k2, chi) = (inv.d(), inv.hk(), inv.k2(), inv.chi());
    let mut lines = vec![];
    let res = dpf_residual(inv);
    lines.push(Line {
        status: verdict(res == 0),
        constraint: "dpf",
        value: res.to_string(),
        detail: format!("d^2 - 10d - 5hk - 2k2 + 12chi = {res}"),
    });
    let c2 = noether_c2(inv);
    lines.push(Line {
        status: verdict(c2 == 12 * chi - k2),
        constraint: "noether",
        value: c2.to_string(),
        detail: format!("c2 = 12chi - k2 = {c2}"),
    });
    let two_g_minus_2 = sectional_genus_two_g_minus_2(inv);
    let parity = two_g_minus_2 % 2 == 0;
    lines.push(Line {
        status: verdict(parity),
        constraint: "genus-parity",
        value: (d + hk).to_string(),
        detail: if parity {
            format!("d + hk = {} is even, g = {}", d + hk, two_g_minus_2 / 2 + 1)
        } else {
            format!("d + hk = {} is odd", d + hk)
        },
    });
    lines.push(Line {
        status: verdict(bmy_ok(inv)),
        constraint: "bmy",
        value: (9 * chi - k2).to_string(),
        detail: format!("k2 = {k2} <= 9chi = {}", 9 * chi),
    });
    let (lhs, rhs) = ((hk as i128) * (hk as i128), (d as i128) * (k2 as i128));
    lines.push(Line {
        status: verdict(lhs >= rhs),
        constraint: "hodge-index",
        value: (lhs - rhs).to_string(),
        detail: format!("hk^2 = {lhs} >= d*k2 = {rhs}"),
    });
    if let Ok(alpha) = slope(inv) {
        lines.push(Line {
            status: "INFO",
            constraint: "slope",
            value: alpha.to_string(),
            detail: format!("k2/chi = {alpha}"),
        });
    }
    if let Some(m) = m {
        let delta = bogomolov_discriminant(&txi_chern(m, inv).map_err(|e| e.to_string())?);
        lines.push(Line {
            status: verdict(!delta.is_negative()),
            constraint: "discriminant",
            value: delta.to_string(),
            detail: format!("Delta(T_xi) on a degree-{m} hypersurface = {delta} >= 0"),
        });
    }
    Ok(lines)
}

pub fn check(path: &Path, m: Option<i64>, format: ReportFormat) -> Result<Finished, String> {
    let records = read_records(path)?;
    let mut all_dpf = true;
    let mut r = Report::new(["record", "status", "constraint", "value", "detail"]);
    let mut text = String::new();
    for (i, inv) in records.iter().enumerate() {
        all_dpf &= dpf_residual(inv) == 0;
        let lines = check_lines(inv, m)?;
        if records.len() > 1 {
            text.push_str(&format!(
                "record {i}: d = {}, hk = {}, k2 = {}, chi = {}\n",
                inv.d(),
                inv.hk(),
                inv.k2(),
                inv.chi()
            ));
        }
        for l in lines {
            text.push_str(&format!("{} {:<12} {}\n", l.status, l.constraint, l.detail));
            r.push([i.to_string(), l.status.into(), l.constraint.into(), l.value, l.detail]);
        }
    }
    let stdout = match format {
        ReportFormat::Table => text,
        _ => r.render(format),
    };
    Ok(Finished { stdout, code: if all_dpf { 0 } else { 1 } })
}

pub fn conic_bundles(format: ReportFormat) -> Result<Finished, String> {
    let mut r = Report::new(["d", "q", "delta", "d_prime", "k2", "hk", "c2", "deg_z"]);
    for s in enumerate_quartic_conic_bundles() {
        r.push([s.d, s.q, s.delta, s.d_prime, s.k2, s.hk, s.c2, s.deg_z]);
    }
    ok(r.render(format))
}

pub fn scrolls(d_max: i64, format: ReportFormat) -> Result<Finished, String> {
    if !(1..=1_000_000).contains(&d_max) {
        return Err(format!("--d {d_max} outside 1..=1000000"));
    }
    let mut r = Report::new(["d", "q"]);
    for s in enumerate_irrational_scrolls(d_max) {
        r.push([s.d, s.q]);
    }
    ok(r.render(format))
}

pub fn quartic_degz(d: Option<i64>, format: ReportFormat) -> Result<Finished, String> {
    let degrees: Vec<i64> = match d {
        Some(d) => vec![d],
        None => (5..=11).collect(),
    };
    let mut r = Report::new(["d", "deg_z", "branch", "discriminant"]);
    for d in degrees {
        for (deg_z, branch) in admissible_quartic_deg_z(d).map_err(|e| e.to_string())? {
            let name = match branch {
                DegZBranch::Stable => "stable",
                DegZBranch::Unstable => "unstable",
            };
            let delta = bogomolov_discriminant(&quartic_node_sheaf(d, deg_z));
            r.push([d.to_string(), deg_z.to_string(), name.into(), delta.to_string()]);
        }
    }
    ok(r.render(format))
}

pub fn segre_config(format: ReportFormat) -> Result<Finished, String> {
    let c = segre_configuration(&["a", "b", "c", "d", "e"]).map_err(|e| e.to_string())?;
    let mut r = Report::new(["plane", "points"]);
    for i in 0..c.planes().len() {
        let members: Vec<String> = c.planes()[i].members.iter().map(|&p| c.point_name(p)).collect();
        r.push([c.plane_name(i), members.join(" ")]);
    }
    r.preamble.push(c.counts_line());
    r.json = Some(serde_json::to_value(&c).map_err(|e| e.to_string())?);
    ok(r.render(format))
}

fn key_value(rows: Vec<(&str, String)>, json: Value) -> Report {
    let mut r = Report::new(["quantity", "value"]);
    for (k, v) in rows {
        r.push([k.to_string(), v]);
    }
    r.json = Some(json);
    r
}

fn join(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn scroll_report(format: ReportFormat) -> Result<Finished, String> {
    let s = scroll_sanity_report();
    let (d, hk, chi) = s.hilbert_triple;
    let rows = vec![
        ("conormal_c1", join(&s.conormal_c1)),
        ("conormal_c1_is_h_minus_k", s.conormal_c1_is_h_minus_k.to_string()),
        ("conormal_c1_sq", s.conormal_c1_sq.to_string()),
        ("conormal_c2", s.conormal_c2.to_string()),
        ("h0_conormal_3h", s.h0_conormal_3h.to_string()),
        ("dim_ix3", s.dim_ix3.to_string()),
        ("genus_h", s.genus_h.to_string()),
        ("genus_gamma", s.genus_gamma.to_string()),
        ("genus_h_minus_k", s.genus_h_minus_k.to_string()),
        ("chi_jz_2h", s.chi_jz_2h.to_string()),
        ("ndp_deg_z", s.ndp_deg_z.to_string()),
        ("k2", s.k2.to_string()),
        ("hilbert_triple", format!("({d}, {hk}, {chi})")),
        ("dpf_residual", s.dpf_residual.to_string()),
    ];
    let json = serde_json::to_value(&s).map_err(|e| e.to_string())?;
    ok(key_value(rows, json).render(format))
}

pub fn appendix_degrees(format: ReportFormat) -> Result<Finished, String> {
    let a = appendix();
    let rows = vec![
        ("deg_y0", a.deg_y0.to_string()),
        ("deg_x_prime", a.deg_x_prime.to_string()),
        ("deg_t_prime", a.deg_t_prime.to_string()),
        ("deg_psi", a.deg_psi.to_string()),
        ("deg_s_prime", a.deg_s_prime.to_string()),
        ("delta_e", format!("{}L + {}f", a.delta_e.0, a.delta_e.1)),
    ];
    let json = serde_json::to_value(&a).map_err(|e| e.to_string())?;
    ok(key_value(rows, json).render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines_for(d: i64, hk: i64, k2: i64, chi: i64, m: Option<i64>) -> Vec<(String, &'static str)> {
        let inv = SurfaceInvariants::new(d, hk, k2, chi).unwrap();
        check_lines(&inv, m).unwrap().into_iter().map(|l| (l.constraint.to_string(), l.status)).collect()
    }

    #[test]
    fn conic_bundle_record_passes_everything() {
        for (c, s) in lines_for(8, 0, -8, 0, Some(4)) {
            assert_ne!(s, "FAIL", "{c}");
        }
    }

    #[test]
    fn dpf_failure_is_reported() {
        let inv = SurfaceInvariants::new(10, 0, 0, 1).unwrap();
        assert_eq!(dpf_residual(&inv), 12);
        assert_eq!(lines_for(10, 0, 0, 1, None)[0], ("dpf".to_string(), "FAIL"));
    }

    #[test]
    fn discriminant_only_with_m() {
        assert!(lines_for(5, -5, 0, 0, None).iter().all(|(c, _)| c != "discriminant"));
        assert!(lines_for(5, -5, 0, 0, Some(3)).iter().any(|(c, _)| c == "discriminant"));
    }

    #[test]
    fn odd_genus_parity_fails() {
        let l = lines_for(5, -4, 0, 0, None);
        assert!(l.contains(&("genus-parity".to_string(), "FAIL")));
    }
}
