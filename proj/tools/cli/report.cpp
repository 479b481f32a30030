#include "report.hpp"

#include <sstream>

#include "polyana/error.hpp"

#ifndef POLYANA_VERSION
#define POLYANA_VERSION "0.0.0"
#endif

namespace polyana::cli {

std::string tool_version() { return POLYANA_VERSION; }

void Report::add(Json record) {
  const std::string v = record.value("verdict", "");
  if (v != kPass && v != kFail && v != kError && v != kInfo)
    throw Error(ErrorCode::BadParams, "record without a verdict");
  if ((v == kFail || v == kError) && !record.contains("repro"))
    throw Error(ErrorCode::BadParams, "failing record without a repro line");
  records_.push_back(std::move(record));
}

bool Report::ok() const {
  for (const Json& r : records_)
    if (r.value("expected", false) && r["verdict"] != kPass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = 1;
  j["tool"] = "polyana";
  j["version"] = tool_version();
  j["command"] = command_;
  j["config"] = config_;
  j["records"] = records_;
  std::size_t pass = 0, fail = 0, err = 0, info = 0, expected = 0;
  for (const Json& r : records_) {
    const std::string v = r["verdict"];
    if (v == kPass) ++pass;
    else if (v == kFail) ++fail;
    else if (v == kError) ++err;
    else ++info;
    if (r.value("expected", false)) ++expected;
  }
  j["summary"] = {{"records", records_.size()}, {"expected", expected}, {"pass", pass},
                  {"fail", fail},           {"error", err},           {"info", info},
                  {"ok", ok()}};
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "check,id,p,n,mode,verdict,expected,repro\n";
  for (const Json& r : records_) {
    auto get = [&](const char* k) { return r.contains(k) ? r[k] : Json(); };
    os << cell(get("check")) << ',' << cell(get("id")) << ',' << cell(get("p")) << ',' << cell(get("n")) << ','
       << cell(get("mode")) << ',' << cell(get("verdict")) << ',' << cell(get("expected")) << ','
       << cell(get("repro")) << '\n';
  }
  return os.str();
}

void Stopwatch::stamp(Json& record) const {
  if (!enabled_) return;
  const auto d = std::chrono::steady_clock::now() - start_;
  record["elapsed_ms"] = std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace polyana::cli
