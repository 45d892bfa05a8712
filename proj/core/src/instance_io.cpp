#include "miv/instance_io.hpp"

#include "miv/error.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace miv {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size() && raw[k] != '#') {
      if (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r' || raw[k] == ',') {
        ++k;
        continue;
      }
      const std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r' && raw[k] != ',' && raw[k] != '#') {
        ++k;
      }
      line.tokens.push_back({raw.substr(start, k - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::size_t parse_size(const Token& tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  const char* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v == 0) {
    throw ParseError(line, tok.column, std::string(what) + " must be a positive integer, got '" +
                                           std::string(tok.text) + "'");
  }
  return v;
}

Opinion parse_entry(const Token& tok, std::size_t line) {
  if (tok.text == "+" || tok.text == "+1" || tok.text == "1") return Opinion::Plus;
  if (tok.text == "-" || tok.text == "-1") return Opinion::Minus;
  throw ParseError(line, tok.column, "expected an entry from {+, -, +1, -1}, got '" + std::string(tok.text) + "'");
}

Rational parse_weight(const Token& tok, std::size_t line) {
  try {
    return Rational::parse(tok.text);
  } catch (const ParseError& e) {
    throw ParseError(line, tok.column + e.column() - 1, "bad weight '" + std::string(tok.text) + "'");
  }
}

std::vector<Rational> parse_weight_line(const Line& line, std::size_t t) {
  if (line.tokens.size() != t) {
    throw ParseError(line.number, line.tokens.front().column,
                     "expected " + std::to_string(t) + " weights, found " + std::to_string(line.tokens.size()));
  }
  std::vector<Rational> out;
  out.reserve(t);
  for (const auto& tok : line.tokens) out.push_back(parse_weight(tok, line.number));
  return out;
}

}  // namespace

VotingInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected header 'miv <n> <t> <mode>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0].text != "miv") {
    throw ParseError(header.number, header.tokens.front().column, "expected header 'miv <n> <t> <mode>'");
  }
  const std::size_t n = parse_size(header.tokens[1], header.number, "n");
  const std::size_t t = parse_size(header.tokens[2], header.number, "t");
  const auto mode_tok = header.tokens[3];
  WeightMode mode{};
  if (mode_tok.text == "unweighted") {
    mode = WeightMode::Unweighted;
  } else if (mode_tok.text == "external") {
    mode = WeightMode::External;
  } else if (mode_tok.text == "internal") {
    mode = WeightMode::Internal;
  } else {
    throw ParseError(header.number, mode_tok.column,
                     "mode must be unweighted, external or internal, got '" + std::string(mode_tok.text) + "'");
  }
  const std::size_t weight_lines = mode == WeightMode::Unweighted ? 0 : (mode == WeightMode::External ? 1 : n);
  const std::size_t expected = 1 + n + weight_lines;
  if (lines.size() < expected) {
    const std::size_t at = lines.back().number + 1;
    throw ParseError(at, 1, "expected " + std::to_string(expected - 1) + " data lines after the header, found " +
                                std::to_string(lines.size() - 1));
  }
  if (lines.size() > expected) throw ParseError(lines[expected].number, 1, "unexpected trailing data");

  std::vector<Opinion> entries;
  entries.reserve(n * t);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = lines[1 + i];
    if (line.tokens.size() != t) {
      throw ParseError(line.number, line.tokens.front().column,
                       "expected " + std::to_string(t) + " entries, found " + std::to_string(line.tokens.size()));
    }
    for (const auto& tok : line.tokens) entries.push_back(parse_entry(tok, line.number));
  }
  PreferenceProfile profile(n, t, std::move(entries));
  switch (mode) {
    case WeightMode::Unweighted:
      return VotingInstance::unweighted(std::move(profile));
    case WeightMode::External:
      return VotingInstance::external(std::move(profile), parse_weight_line(lines[1 + n], t));
    case WeightMode::Internal: {
      std::vector<std::vector<Rational>> rows;
      rows.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rows.push_back(parse_weight_line(lines[1 + n + i], t));
      return VotingInstance::internal(std::move(profile), std::move(rows));
    }
  }
  throw ParseError(header.number, mode_tok.column, "unknown mode");
}

std::string serialize_instance(const VotingInstance& instance) {
  std::ostringstream os;
  os << "miv " << instance.n() << ' ' << instance.t() << ' ' << to_string(instance.mode()) << '\n';
  for (std::size_t i = 0; i < instance.n(); ++i) {
    const auto row = instance.profile().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << (row[j] == Opinion::Plus ? "+1" : "-1");
    os << '\n';
  }
  auto write_row = [&](const std::vector<Rational>& w) {
    for (std::size_t j = 0; j < w.size(); ++j) os << (j ? " " : "") << w[j].to_string();
    os << '\n';
  };
  if (instance.mode() == WeightMode::External) write_row(instance.weights().external_weights());
  if (instance.mode() == WeightMode::Internal) {
    for (const auto& row : instance.weights().internal_weights()) write_row(row);
  }
  return os.str();
}

}  // namespace miv
