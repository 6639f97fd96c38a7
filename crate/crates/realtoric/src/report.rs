//! Structured results for the command-line front end.
//!
//! Reports are plain data and serialize deterministically (fixed field
//! order, ordered maps), so equal computations emit byte-identical JSON
//! regardless of worker count. Timing is deliberately not a field; the
//! CLI prints elapsed time only in human-readable output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::subset_label;
use crate::cover::{subset_members, SmallCover};
use crate::error::Result;
use crate::families::hessenberg_betti_closed_form;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub mask: u64,
    pub members: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SubsetContribution {
    pub mask: u64,
    pub members: Vec<u32>,
    /// homology degree of the quotient manifold -> rank contributed
    pub contributions: BTreeMap<i32, u64>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ClosedFormCheck {
    /// Expected rank per degree, as decimal strings (the values outgrow
    /// u64 quickly).
    pub expected: Vec<String>,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub betti: Vec<u64>,
    pub mod2_betti: Vec<i64>,
    pub orientable: bool,
    pub orientation_witness: Option<Witness>,
    pub euler: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Vec<SubsetContribution>>,
}

impl Report {
    /// Runs the full pipeline on a validated cover. `n` here is the
    /// manifold dimension (the characteristic matrix row count).
    pub fn for_cover(input: &str, cover: &SmallCover, with_breakdown: bool) -> Result<Report> {
        let betti = cover.betti_numbers();
        let euler = cover.euler_characteristic_checked(&betti)?;
        let mod2 = cover.mod2_betti()?;
        let witness = cover.orientation_witness().map(|mask| Witness {
            mask,
            members: subset_members(mask),
        });
        let breakdown = with_breakdown.then(|| {
            betti
                .breakdown()
                .iter()
                .map(|(&mask, contributions)| SubsetContribution {
                    mask,
                    members: subset_members(mask),
                    contributions: contributions.clone(),
                })
                .collect()
        });
        Ok(Report {
            input: input.to_string(),
            n: cover.n(),
            m: cover.m(),
            betti: betti.entries().to_vec(),
            mod2_betti: mod2.entries().to_vec(),
            orientable: witness.is_some(),
            orientation_witness: witness,
            euler,
            closed_form: None,
            breakdown,
        })
    }

    /// Attaches the A_{2i}·C(n,2i) column for the permutahedral cover of
    /// order `order` and records the verdict. Returns whether it matched.
    pub fn attach_closed_form(&mut self, order: usize) -> bool {
        let expected: Vec<String> = (0..self.betti.len())
            .map(|i| hessenberg_betti_closed_form(order, i).to_string())
            .collect();
        let matches = expected
            .iter()
            .zip(&self.betti)
            .all(|(e, b)| e == &b.to_string());
        self.closed_form = Some(ClosedFormCheck {
            expected,
            verdict: if matches { "MATCH" } else { "MISMATCH" }.to_string(),
        });
        matches
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input));
        out.push_str(&format!("n = {}, m = {}\n", self.n, self.m));
        out.push_str("rational Betti numbers:\n");
        for (q, b) in self.betti.iter().enumerate() {
            out.push_str(&format!("  b_{q} = {b}\n"));
        }
        let h: Vec<String> = self.mod2_betti.iter().map(i64::to_string).collect();
        out.push_str(&format!("mod 2 Betti numbers (h-vector): {}\n", h.join(" ")));
        match &self.orientation_witness {
            Some(w) => out.push_str(&format!(
                "orientable: yes (witness S = {}, mask {})\n",
                subset_label(&w.members),
                w.mask
            )),
            None => out.push_str("orientable: no\n"),
        }
        out.push_str(&format!("euler characteristic: {}\n", self.euler));
        if let Some(check) = &self.closed_form {
            out.push_str("closed form check (expected rank per degree):\n");
            for (i, e) in check.expected.iter().enumerate() {
                out.push_str(&format!(
                    "  i = {i}: computed {} expected {e}\n",
                    self.betti.get(i).copied().unwrap_or(0)
                ));
            }
            out.push_str(&format!("  verdict: {}\n", check.verdict));
        }
        if let Some(breakdown) = &self.breakdown {
            out.push_str("per-subset contributions:\n");
            for entry in breakdown {
                let degrees: Vec<String> = entry
                    .contributions
                    .iter()
                    .map(|(q, r)| format!("q={q} -> {r}"))
                    .collect();
                out.push_str(&format!(
                    "  S = {} (mask {}): {}\n",
                    subset_label(&entry.members),
                    entry.mask,
                    degrees.join(", ")
                ));
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FaceCheck {
    pub face: Vec<u32>,
    pub labels: Vec<String>,
    pub ok: bool,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub faces: Vec<FaceCheck>,
    pub valid: bool,
}

impl ValidationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input));
        out.push_str(&format!("n = {}, m = {}\n", self.n, self.m));
        for check in &self.faces {
            out.push_str(&format!(
                "  face {{{}}}: {}\n",
                check.labels.join(","),
                if check.ok { "ok" } else { "SINGULAR" }
            ));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.valid { "valid" } else { "INVALID" }
        ));
        out
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct MaEulerReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    /// Euler characteristic of the real moment-angle complex, by cell count.
    pub moment_angle_euler: String,
    /// Euler characteristic of the quotient manifold.
    pub cover_euler: i64,
    /// 2^(m-n) times the cover's Euler characteristic.
    pub scaled_cover_euler: String,
    pub verdict: String,
}

impl MaEulerReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render_human(&self) -> String {
        format!(
            "input: {}\nn = {}, m = {}\nmoment-angle Euler characteristic: {}\n\
             cover Euler characteristic: {} (scaled by 2^{}: {})\nverdict: {}\n",
            self.input,
            self.n,
            self.m,
            self.moment_angle_euler,
            self.cover_euler,
            self.m - self.n,
            self.scaled_cover_euler,
            self.verdict
        )
    }
}
