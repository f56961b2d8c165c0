/// @file manufactured_sources.hpp
/// @brief Exact forcing terms for the manufactured-solution study.
///
/// Generated by tools/gen_manufactured.py — do not edit by hand.
/// Each function evaluates the exact spatial flux divergence of one
/// governing equation on the steady manufactured profiles; `c` is
/// the packed parameter block built by pack_parameters() in
/// src/analysis/manufactured.cpp.

#pragma once

namespace bivel::analysis {

double manufactured_source_nsf_baseline_density(double x, const double* c);
double manufactured_source_nsf_baseline_momentum(double x, const double* c);
double manufactured_source_nsf_baseline_energy(double x, const double* c);
double manufactured_source_bivelocity_reduced_density(double x, const double* c);
double manufactured_source_bivelocity_reduced_momentum(double x, const double* c);
double manufactured_source_bivelocity_reduced_energy(double x, const double* c);
double manufactured_source_klimontovich_density(double x, const double* c);
double manufactured_source_klimontovich_momentum(double x, const double* c);
double manufactured_source_klimontovich_energy(double x, const double* c);
double manufactured_source_volume_full_density(double x, const double* c);
double manufactured_source_volume_full_momentum(double x, const double* c);
double manufactured_source_volume_full_energy(double x, const double* c);
double manufactured_source_volume_full_v_bar(double x, const double* c);

}  // namespace bivel::analysis
