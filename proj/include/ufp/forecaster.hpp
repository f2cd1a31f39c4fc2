#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "ufp/protocol.hpp"

namespace ufp {

/// v_n = c * n^p with c >= 0 and integer p.
struct PowerLaw {
  mpq_class coefficient;
  long exponent = 0;
};

/// A finite variance sequence loaded from disk; values[0] is v_1.
struct FromFile {
  std::filesystem::path path;
  std::vector<mpq_class> values;
};

using ForecasterSpec = std::variant<PowerLaw, FromFile>;

enum class Divergence { Divergent, Convergent, Unknown };

std::string_view to_string(Divergence d);

/// Reads the variance file format: one rational or decimal literal per line,
/// blank lines and '#' comments ignored. Throws ProtocolError(IoError) when
/// the file cannot be read, ParseError on a malformed line and
/// ProtocolError(NegativeVariance) on a negative value.
FromFile load_variance_file(const std::filesystem::path& path);

/// Same format, from text already in memory.
std::vector<mpq_class> parse_variance_lines(const std::string& text, const std::string& source_name);

/// Exact v_n. Throws ProtocolError(SequenceExhausted) past the end of a file.
mpq_class exact_variance_at(const ForecasterSpec& spec, Round n);

Scalar variance_at(const ForecasterSpec& spec, Round n, NumericMode mode = NumericMode::ExactRational);

/// sum_{k=1}^{horizon} v_k / k^2.
Scalar kolmogorov_partial_sum(const ForecasterSpec& spec, Round horizon,
                              NumericMode mode = NumericMode::ExactRational);

Divergence classify_divergence(const ForecasterSpec& spec);

/// Longest horizon the spec can serve, or nullopt when unbounded.
std::optional<Round> available_rounds(const ForecasterSpec& spec);

}  // namespace ufp
