//! Bulk classification. The plain functions follow the `parallel` feature;
//! the `_seq` / `_par` variants are exposed for benchmarking.

use crate::error::Result;
use crate::exactalg::{BinaryForm, Rational};
use crate::gitforms::{git_classify, GITClass};
use crate::par;
use crate::wps::{analyze, k_classify, KClass, Verdict, WeightedEquation};

pub fn classify_forms(forms: &[BinaryForm<Rational>], a: usize) -> Vec<Result<GITClass>> {
    par::map(forms, |g| git_classify(g, a))
}

pub fn classify_forms_seq(forms: &[BinaryForm<Rational>], a: usize) -> Vec<Result<GITClass>> {
    par::map_seq(forms, |g| git_classify(g, a))
}

#[cfg(feature = "parallel")]
pub fn classify_forms_par(forms: &[BinaryForm<Rational>], a: usize) -> Vec<Result<GITClass>> {
    par::map_par(forms, |g| git_classify(g, a))
}

pub fn k_classify_all(eqs: &[WeightedEquation]) -> Vec<KClass> {
    par::map(eqs, k_classify)
}

pub fn k_classify_all_seq(eqs: &[WeightedEquation]) -> Vec<KClass> {
    par::map_seq(eqs, k_classify)
}

#[cfg(feature = "parallel")]
pub fn k_classify_all_par(eqs: &[WeightedEquation]) -> Vec<KClass> {
    par::map_par(eqs, k_classify)
}

pub fn verdicts(eqs: &[WeightedEquation]) -> Vec<Verdict> {
    par::map(eqs, analyze)
}
