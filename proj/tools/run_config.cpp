#include "run_config.hpp"

#include <charconv>
#include <string>

#include "ssbc/error.hpp"

namespace ssbc::cli {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::ssbc_online, "ssbc_online"},
    {Method::ssbc_streaming, "ssbc_streaming"},
    {Method::lsh, "lsh"},
    {Method::exact_d, "exact_d"},
    {Method::exact_r, "exact_r"},
};

Index parse_index(std::string_view text) {
  Index value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (const auto& [method, name] : kMethodNames)
    if (name == text) return method;
  throw ParameterError("unknown method '" + std::string(text) +
                       "' (expected ssbc_online, ssbc_streaming, lsh, exact_d or exact_r)");
}

std::string SigmaMode::to_string() const {
  switch (kind) {
    case Kind::nn30: return "nn30";
    case Kind::all: return "all";
    case Kind::nn30_div4: return "nn30_div4";
    case Kind::fixed: return "fixed:" + format_double(value);
  }
  return "nn30";
}

SigmaMode SigmaMode::parse(std::string_view text) {
  SigmaMode mode;
  if (text == "nn30") return mode;
  if (text == "all") {
    mode.kind = Kind::all;
    return mode;
  }
  if (text == "nn30_div4") {
    mode.kind = Kind::nn30_div4;
    return mode;
  }
  if (text.rfind("fixed:", 0) == 0) {
    const std::string_view number = text.substr(6);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size() || !(value > 0.0))
      throw ParameterError("sigma mode fixed:<v> needs a positive number");
    mode.kind = Kind::fixed;
    mode.value = value;
    return mode;
  }
  throw ParameterError("unknown sigma mode '" + std::string(text) +
                       "' (expected nn30, all, nn30_div4 or fixed:<v>)");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json data_json = {{"zscore", data.zscore}};
  if (data.csv_path) {
    std::vector<Index> drops = data.csv.drop_columns;
    data_json["csv"] = {{"path", *data.csv_path},
                        {"delimiter", std::string(1, data.csv.delimiter)},
                        {"has_header", data.csv.has_header},
                        {"drop_columns", drops},
                        {"drop_rows_with_missing", data.csv.drop_rows_with_missing}};
  } else {
    data_json["synthetic"] = {{"generator", "uniform"},
                              {"n", data.synth_n ? data.synth_n : train_count + test_count},
                              {"d", data.synth_d},
                              {"seed", data.synth_seed.value_or(seed)}};
  }
  return {{"method", std::string(to_string(method))},
          {"k", k},
          {"epsilon", epsilon},
          {"sigma_mode", sigma_mode.to_string()},
          {"seed", seed},
          {"data", std::move(data_json)},
          {"train_count", train_count},
          {"test_count", test_count},
          {"query_count", query_count},
          {"hamming_radius", hamming_radius ? nlohmann::json(*hamming_radius) : nlohmann::json("sweep")},
          {"encode_train", encode_train},
          {"packed", packed},
          {"exact_guard", exact_guard}};
}

std::vector<Index> parse_k_list(std::string_view text) {
  std::vector<Index> ks;
  if (text.find(':') != std::string_view::npos) {
    std::vector<Index> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = text.find(':', start);
      parts.push_back(parse_index(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[0] > parts[1])
      throw ParameterError("k range must be start:stop:step with step >= 1 and start <= stop");
    for (Index k = parts[0]; k <= parts[1]; k += parts[2]) ks.push_back(k);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto pos = text.find(',', start);
      const auto piece = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
      if (!piece.empty()) ks.push_back(parse_index(piece));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  if (ks.empty()) throw ParameterError("empty k list");
  for (Index k : ks)
    if (k < 1) throw ParameterError("k values must be >= 1");
  return ks;
}

}  // namespace ssbc::cli
