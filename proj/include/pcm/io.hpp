#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "pcm/axioms.hpp"
#include "pcm/matrix.hpp"
#include "pcm/transform.hpp"

namespace pcm::io {

using json = nlohmann::json;

/// Parses "0.5"-style decimals and "p/q" fraction literals.
double parse_ratio(const std::string& text);

/// CSV: n lines of n comma-separated values; lines starting with '#' and blank
/// lines are skipped. Cells accept decimals and fractions.
PairwiseComparisonMatrix matrix_from_csv(const std::string& text,
                                         const ToleranceConfig& tol = {});

/// JSON: {"n": int, "rows": [[...], ...]} or {"n": int, "upper": [...]} with
/// cells given as numbers or as decimal/fraction strings.
PairwiseComparisonMatrix matrix_from_json(const json& j,
                                          const ToleranceConfig& tol = {});

/// Reads either format, sniffing JSON by a leading '{'.
PairwiseComparisonMatrix read_matrix(std::istream& in,
                                     const ToleranceConfig& tol = {});

std::string format_fixed(double value, int decimals);
std::string format_sig(double value, int significant_digits);

std::string to_csv(const PairwiseComparisonMatrix& A, int precision = 6);
std::string to_text(const PairwiseComparisonMatrix& A, int precision = 6);
json to_json(const PairwiseComparisonMatrix& A);

json to_json(const TriadTransform& t);  // 1-based triad
TriadTransform transform_from_json(const json& j);

/// {"initial": matrix, "steps": [{"triad": [i,j,k], "alpha": a, "matrix": m}],
/// "final": matrix} with 1-based triads. Setting include_identity_steps false
/// drops steps whose alpha is within kIdentityAlphaTol of 1.
json to_json(const ConsistificationTrace& trace,
             bool include_identity_steps = true);

json to_json(const AxiomReport& report);
AxiomReport report_from_json(const json& j);

json to_json(const IndependenceTable& table);

}  // namespace pcm::io
