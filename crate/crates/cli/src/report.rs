use compset::reach::ReachabilitySet;
use compset::{CorrelationValue, VerificationReport};
use serde_json::{json, Value};

fn value_json(tau: isize, v: &CorrelationValue) -> Value {
    let mut out = json!({ "tau": tau, "value": v.to_string(), "coords": v.coords() });
    if let Some((re, im)) = v.gaussian() {
        out["re"] = json!(re);
        out["im"] = json!(im);
    }
    out
}

pub fn verification_json(r: &VerificationReport) -> Value {
    let profile: Vec<Value> = r
        .sum_profile
        .shifts()
        .map(|tau| value_json(tau, r.sum_profile.at(tau)))
        .collect();
    let defects: serde_json::Map<String, Value> = r
        .defect_magnitudes
        .iter()
        .map(|(tau, m)| (tau.to_string(), json!(m)))
        .collect();
    json!({
        "is_cs": r.is_cs,
        "set_size": r.set_size,
        "length": r.length,
        "peak": r.peak(),
        "expected_peak": r.set_size * r.length,
        "peak_ok": r.peak_ok,
        "first_defect_shift": r.first_defect_shift,
        "defect_magnitudes": defects,
        "sum_profile": profile,
    })
}

pub fn verification_text(r: &VerificationReport) -> String {
    let peak = r
        .peak()
        .map_or_else(|| r.sum_profile.at(0).to_string(), |p| p.to_string());
    let first = r
        .first_defect_shift
        .map_or_else(|| "none".to_owned(), |s| s.to_string());
    let profile: Vec<String> = r
        .sum_profile
        .nonnegative()
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut out = format!(
        "is_cs: {}\nset_size: {}\nlength: {}\npeak: {} (expected {})\nfirst_defect_shift: {}\n",
        r.is_cs,
        r.set_size,
        r.length,
        peak,
        r.set_size * r.length,
        first
    );
    if !r.defect_magnitudes.is_empty() {
        let d: Vec<String> = r
            .defect_magnitudes
            .iter()
            .map(|(tau, m)| format!("{tau}:{m:.4}"))
            .collect();
        out.push_str(&format!("defects: {}\n", d.join(" ")));
    }
    out.push_str(&format!(
        "sum_profile[0..{}]: {}\n",
        r.length,
        profile.join(" ")
    ));
    out
}

pub fn reach_text(set: &ReachabilitySet) -> String {
    let mut out = format!(
        "q={} size={} max={} count={}\nlen\tconstructive\twitnesses\n",
        set.q,
        set.set_size,
        set.max,
        set.entries.len()
    );
    for e in set.entries.values() {
        let w: Vec<String> = e.witnesses.iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            e.length,
            if e.constructive { "yes" } else { "no" },
            w.join(" ")
        ));
    }
    out
}
