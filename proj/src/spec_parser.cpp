#include "ufp/spec_parser.hpp"

#include <charconv>

namespace ufp {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(std::string expected, std::size_t at) const {
    throw ParseError(at, std::move(expected), std::string(text_));
  }
  [[noreturn]] void fail(std::string expected) const { fail(std::move(expected), pos_); }

  bool accept(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }

  void expect_end() const {
    if (pos_ != text_.size()) fail("end of input");
  }

  [[nodiscard]] bool at_end() const { return pos_ == text_.size(); }
  [[nodiscard]] std::size_t position() const { return pos_; }

  std::string_view rest() {
    auto r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }

  // Everything up to the next ',' or the end.
  std::string_view field() {
    const std::size_t end = std::min(text_.find(',', pos_), text_.size());
    auto f = text_.substr(pos_, end - pos_);
    pos_ = end;
    return f;
  }

  mpq_class rational() {
    const std::size_t at = pos_;
    const auto literal = field();
    try {
      return parse_rational(literal);
    } catch (const std::invalid_argument&) {
      fail("rational literal (p/q or decimal)", at);
    }
  }

  long integer() {
    const std::size_t at = pos_;
    const auto literal = field();
    long value = 0;
    const char* first = literal.data();
    if (!literal.empty() && literal.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, literal.data() + literal.size(), value);
    if (literal.empty() || ec != std::errc{} || ptr != literal.data() + literal.size()) fail("integer", at);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr std::string_view kForecasterKinds = "'powerlaw:', 'constant:' or 'file:'";
constexpr std::string_view kSkepticKinds = "'zero', 'avoider:', 'momentum:', 'negv:' or 'replay:'";

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

ForecasterSpec parse_forecaster_spec(std::string_view text) {
  Cursor in(text);
  if (in.accept("powerlaw:")) {
    in.expect("c=");
    const std::size_t at = in.position();
    PowerLaw law{in.rational(), 0};
    if (sgn(law.coefficient) < 0) in.fail("non-negative coefficient", at);
    in.expect(",p=");
    law.exponent = in.integer();
    in.expect_end();
    return law;
  }
  if (in.accept("constant:")) {
    in.expect("c=");
    const std::size_t at = in.position();
    PowerLaw law{in.rational(), 0};
    if (sgn(law.coefficient) < 0) in.fail("non-negative coefficient", at);
    in.expect_end();
    return law;
  }
  if (in.accept("file:")) {
    const std::size_t at = in.position();
    const auto path = in.rest();
    if (path.empty()) in.fail("file path", at);
    return FromFile{std::filesystem::path(std::string(path)), {}};
  }
  in.fail(std::string(kForecasterKinds));
}

SkepticSpec parse_skeptic_spec(std::string_view text) {
  Cursor in(text);
  if (in.accept("zero")) {
    in.expect_end();
    return ZeroSkeptic{};
  }
  if (in.accept("avoider:")) {
    in.expect("eps=");
    const std::size_t eps_at = in.position();
    mpq_class eps = in.rational();
    if (sgn(eps) <= 0) in.fail("positive epsilon", eps_at);
    if (in.at_end()) return AvoiderSkeptic{EpsilonSchedule::constant(eps)};
    in.expect(",decay=");
    if (in.accept("const")) {
      in.expect_end();
      return AvoiderSkeptic{EpsilonSchedule::constant(eps)};
    }
    if (in.accept("geo")) {
      in.expect(",ratio=");
      const std::size_t ratio_at = in.position();
      mpq_class ratio = in.rational();
      if (sgn(ratio) <= 0 || ratio >= 1) in.fail("ratio in (0, 1)", ratio_at);
      in.expect_end();
      return AvoiderSkeptic{EpsilonSchedule::geometric(eps, ratio)};
    }
    in.fail("'const' or 'geo'");
  }
  if (in.accept("momentum:")) {
    in.expect("m=");
    MomentumSkeptic s{in.rational()};
    in.expect_end();
    return s;
  }
  if (in.accept("negv:")) {
    in.expect("v=");
    const std::size_t at = in.position();
    NegativeVSkeptic s{in.rational()};
    if (sgn(s.stake_quadratic) >= 0) in.fail("negative quadratic stake", at);
    in.expect_end();
    return s;
  }
  if (in.accept("replay:")) {
    const std::size_t at = in.position();
    const auto path = in.rest();
    if (path.empty()) in.fail("file path", at);
    return ReplaySkeptic{std::filesystem::path(std::string(path))};
  }
  in.fail(std::string(kSkepticKinds));
}

std::variant<ForecasterSpec, SkepticSpec> parse_spec(std::string_view text) {
  for (std::string_view kind : {"powerlaw:", "constant:", "file:"}) {
    if (text.starts_with(kind)) return parse_forecaster_spec(text);
  }
  for (std::string_view kind : {"zero", "avoider:", "momentum:", "negv:", "replay:"}) {
    if (text.starts_with(kind)) return parse_skeptic_spec(text);
  }
  throw ParseError(0, std::string(kForecasterKinds) + ", " + std::string(kSkepticKinds), std::string(text));
}

ForecasterSpec resolve_forecaster(ForecasterSpec spec) {
  if (auto* file = std::get_if<FromFile>(&spec)) return load_variance_file(file->path);
  return spec;
}

std::string describe(const ForecasterSpec& spec) {
  if (const auto* law = std::get_if<PowerLaw>(&spec)) {
    return "powerlaw:c=" + rational_text(law->coefficient) + ",p=" + std::to_string(law->exponent);
  }
  return "file:" + std::get<FromFile>(spec).path.string();
}

std::string describe(const SkepticSpec& spec) {
  struct Describer {
    std::string operator()(const ZeroSkeptic&) const { return "zero"; }
    std::string operator()(const AvoiderSkeptic& s) const {
      std::string text = "avoider:eps=" + rational_text(s.schedule.epsilon);
      if (s.schedule.kind == EpsilonSchedule::Kind::Geometric) {
        text += ",decay=geo,ratio=" + rational_text(s.schedule.ratio);
      }
      return text;
    }
    std::string operator()(const MomentumSkeptic& s) const { return "momentum:m=" + rational_text(s.stake_linear); }
    std::string operator()(const NegativeVSkeptic& s) const { return "negv:v=" + rational_text(s.stake_quadratic); }
    std::string operator()(const ReplaySkeptic& s) const { return "replay:" + s.path.string(); }
  };
  return std::visit(Describer{}, spec);
}

}  // namespace ufp
