#include "ufp/forecaster.hpp"

#include <fstream>
#include <sstream>

namespace ufp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(Divergence d) {
  switch (d) {
    case Divergence::Divergent: return "divergent";
    case Divergence::Convergent: return "convergent";
    case Divergence::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<mpq_class> parse_variance_lines(const std::string& text, const std::string& source_name) {
  std::vector<mpq_class> values;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view content = line;
    if (const auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    content = trim(content);
    if (!content.empty()) {
      mpq_class value;
      try {
        value = parse_rational(content);
      } catch (const std::invalid_argument&) {
        throw ParseError(offset + static_cast<std::size_t>(content.data() - line.data()), "rational literal",
                         source_name + ":" + std::to_string(line_no));
      }
      if (sgn(value) < 0) {
        throw ProtocolError(ErrorCode::NegativeVariance,
                            source_name + ":" + std::to_string(line_no) + ": " + value.get_str());
      }
      values.push_back(std::move(value));
    }
    offset += line.size() + 1;
  }
  return values;
}

FromFile load_variance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProtocolError(ErrorCode::IoError, "cannot open variance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromFile{path, parse_variance_lines(buffer.str(), path.string())};
}

mpq_class exact_variance_at(const ForecasterSpec& spec, Round n) {
  if (n < 1) throw std::invalid_argument("rounds are numbered from 1");
  if (const auto* law = std::get_if<PowerLaw>(&spec)) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(law->exponent < 0 ? -law->exponent : law->exponent));
    mpq_class v = law->exponent >= 0 ? mpq_class(law->coefficient * power) : mpq_class(law->coefficient / power);
    v.canonicalize();
    return v;
  }
  const auto& file = std::get<FromFile>(spec);
  if (static_cast<std::size_t>(n) > file.values.size()) {
    throw ProtocolError(ErrorCode::SequenceExhausted, file.path.string() + " holds " +
                                                          std::to_string(file.values.size()) +
                                                          " variances, round " + std::to_string(n) + " requested");
  }
  return file.values[static_cast<std::size_t>(n - 1)];
}

Scalar variance_at(const ForecasterSpec& spec, Round n, NumericMode mode) {
  return Scalar::from_rational(exact_variance_at(spec, n), mode);
}

Scalar kolmogorov_partial_sum(const ForecasterSpec& spec, Round horizon, NumericMode mode) {
  if (horizon < 1) throw ProtocolError(ErrorCode::InvalidHorizon, "horizon must be >= 1");
  Scalar sum = Scalar::integer(0, mode);
  for (Round k = 1; k <= horizon; ++k) {
    const Scalar kk = Scalar::integer(k, mode);
    sum += variance_at(spec, k, mode) / (kk * kk);
  }
  return sum;
}

Divergence classify_divergence(const ForecasterSpec& spec) {
  if (const auto* law = std::get_if<PowerLaw>(&spec)) {
    if (sgn(law->coefficient) == 0) return Divergence::Convergent;
    // Terms c * n^(p-2): a p-series diverges iff p - 2 >= -1.
    return law->exponent >= 1 ? Divergence::Divergent : Divergence::Convergent;
  }
  return Divergence::Unknown;
}

std::optional<Round> available_rounds(const ForecasterSpec& spec) {
  if (const auto* file = std::get_if<FromFile>(&spec)) return static_cast<Round>(file->values.size());
  return std::nullopt;
}

}  // namespace ufp
