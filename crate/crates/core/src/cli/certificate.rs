//! Canonical JSON: keys sorted, every integer written as a decimal string.

use serde_json::{json, Map, Value};

use super::pipeline::{PlaceReport, PlaceRole, PointSource, RationalityCertificate, ReductionReport};
use crate::exactmath::RootInterval;
use crate::localcert::{HenselLift, LocalPointCertificate, PadicTreeReport, TreeOutcome};
use crate::reduction::{Mod2Report, SingularLocusReport};

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(s).collect())
}

fn opt(x: Option<Value>) -> Value {
    x.unwrap_or(Value::Null)
}

pub fn interval_json(r: &RootInterval) -> Value {
    json!({ "lo": s(&r.lo), "hi": s(&r.hi) })
}

pub fn lift_json(l: &HenselLift) -> Value {
    json!({
        "precision": s(l.precision),
        "modulus": s(&l.modulus),
        "coordinates": strings(&l.coordinates),
    })
}

pub fn local_json(c: &LocalPointCertificate) -> Value {
    json!({
        "place": s(c.place),
        "chart": opt(c.chart.map(s)),
        "coordinates": opt(c.coordinates.map(strings)),
        "jacobian_rank": opt(c.jacobian_rank.map(s)),
        "liftable": s(c.liftable),
        "justification": s(&c.justification),
        "lift": opt(c.lift.as_ref().map(lift_json)),
        "real_root_intervals": Value::Array(c.real_roots.iter().map(interval_json).collect()),
    })
}

pub fn tree_json(t: &PadicTreeReport) -> Value {
    let outcome = match t.outcome {
        TreeOutcome::Empty { level } => format!("empty mod {}^{level}", t.prime),
        TreeOutcome::Survives => format!("solutions persist mod {}^{}", t.prime, t.depth),
        TreeOutcome::CapExceeded => "node cap exceeded".to_string(),
    };
    let charts: Vec<Value> = t
        .charts
        .iter()
        .map(|c| json!({ "chart": s(c.chart), "solutions_by_level": strings(&c.counts) }))
        .collect();
    json!({ "prime": s(t.prime), "depth": s(t.depth), "outcome": s(outcome), "charts": charts })
}

fn place_json(r: &PlaceReport) -> Value {
    let mut v = local_json(&r.certificate);
    let role = match r.role {
        PlaceRole::Real => "real",
        PlaceRole::BadPrime => "bad prime",
        PlaceRole::GoodPrime => "good prime",
    };
    let source = r.source.map(|src| match src {
        PointSource::SuppliedWitness => "verified supplied witness",
        PointSource::Search { exhaustive: true } => "found by exhaustive search",
        PointSource::Search { exhaustive: false } => "found by sampled search",
        PointSource::SmoothReduction => "smooth reduction",
    });
    let obj = v.as_object_mut().expect("object");
    obj.insert("role".into(), s(role));
    obj.insert("source".into(), opt(source.map(s)));
    obj.insert("notes".into(), strings(&r.notes));
    obj.insert("solution_tree".into(), opt(r.solution_tree.as_ref().map(tree_json)));
    v
}

pub fn locus_json(r: &SingularLocusReport) -> Value {
    json!({
        "prime": s(r.prime),
        "method": s(r.method),
        "points": Value::Array(r.points.iter().map(strings).collect()),
        "ranks": strings(&r.ranks),
        "conical": r.conical,
        "fibers": strings(&r.fibers),
    })
}

pub fn mod2_json(r: &Mod2Report) -> Value {
    let forms: Vec<Value> = r
        .forms
        .iter()
        .map(|f| {
            json!({
                "form": s(format!("Q{}", f.index)),
                "reduced": s(&f.reduced),
                "linear_factorizations": Value::Array(
                    f.linear_factorizations.iter().map(|(a, b)| strings([a, b])).collect()
                ),
                "square_of": opt(f.square_of.map(s)),
                "verdict": s(&f.verdict),
            })
        })
        .collect();
    let evidence: Vec<Value> = r
        .non_reduced
        .iter()
        .map(|e| {
            json!({
                "factor_of": s(format!("Q{}", e.factor_of)),
                "hyperplane": s(e.hyperplane),
                "square_restriction_of": s(format!("Q{}", e.restricted_form)),
            })
        })
        .collect();
    json!({ "forms": forms, "non_reduced_evidence": evidence, "verdict": s(&r.verdict) })
}

fn reduction_json(r: &ReductionReport) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "coordinates": strings(w.coords),
                "on_variety": w.on_variety,
                "jacobian_rank": s(w.jacobian_rank),
                "in_singular_locus": w.in_locus,
            })
        })
        .collect();
    json!({
        "prime": s(r.prime),
        "singular_locus": opt(r.singular_locus.as_ref().map(locus_json)),
        "non_conical": opt(r.non_conical.map(Value::Bool)),
        "mod2": opt(r.mod2.as_ref().map(mod2_json)),
        "singular_witnesses": witnesses,
        "error": opt(r.error.as_ref().map(s)),
    })
}

impl RationalityCertificate {
    pub fn to_json(&self) -> Value {
        let curve = self.curve.as_ref().map(|cd| {
            let factorization: Map<String, Value> = cd
                .factorization
                .primes
                .iter()
                .map(|(p, e)| (p.to_string(), s(e)))
                .collect();
            json!({
                "polynomial_discriminant": s(&cd.poly_disc),
                "curve_discriminant": s(&cd.curve_disc),
                "curve_discriminant_factorization": factorization,
                "bad_primes": strings(&cd.bad_primes),
                "real_weierstrass_points": s(cd.real_weierstrass_count),
                "real_root_intervals": Value::Array(cd.real_roots.iter().map(interval_json).collect()),
            })
        });
        json!({
            "input": {
                "q1": s(&self.q1),
                "q2": s(&self.q2),
                "witnesses": strings(&self.witnesses),
            },
            "config": {
                "good_prime_samples": strings(&self.good_prime_samples),
                "search_budget": s(self.search_budget),
                "lift_precision": s(self.lift_precision),
                "prng_seed": s(self.prng_seed),
            },
            "characteristic_form": {
                "coefficients": strings(self.characteristic_form.coeffs()),
                "text": s(&self.characteristic_form),
            },
            "smoothness": s(self.smoothness),
            "curve": opt(curve),
            "places": Value::Array(self.places.iter().map(place_json).collect()),
            "reductions": Value::Array(self.reductions.iter().map(reduction_json).collect()),
            "external_inputs": strings(&self.external_inputs),
            "errors": strings(&self.errors),
            "status": s(self.status.as_str()),
            "verdict": s(&self.verdict),
        })
    }

    /// Pretty-printed JSON with sorted keys; identical input gives identical bytes.
    pub fn to_canonical_string(&self) -> String {
        canonical(&self.to_json())
    }
}

pub fn canonical(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("serializable");
    out.push('\n');
    out
}
