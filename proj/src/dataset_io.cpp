#include "mubeam/dataset_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mubeam {

namespace {

void put_u16(std::vector<uint8_t>& b, uint16_t v) {
  b.push_back(static_cast<uint8_t>(v & 0xff));
  b.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u64(std::vector<uint8_t>& b, uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<uint8_t>& b, double d) {
  uint64_t v;
  std::memcpy(&v, &d, 8);
  put_u64(b, v);
}

struct Reader {
  const std::vector<uint8_t>& b;
  size_t pos = 0;
  size_t record_index = 0;

  bool eof() const { return pos >= b.size(); }

  void need(size_t n) {
    if (pos + n > b.size())
      throw std::runtime_error("dataset truncated in record " +
                               std::to_string(record_index));
  }
  uint16_t u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>(b[pos] | (b[pos + 1] << 8));
    pos += 2;
    return v;
  }
  uint8_t u8() {
    need(1);
    return b[pos++];
  }
  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[pos + i]) << (8 * i);
    pos += 8;
    return v;
  }
  double f64() {
    uint64_t v = u64();
    double d;
    std::memcpy(&d, &v, 8);
    return d;
  }
};

std::string fmt_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

void put_cmat(std::vector<uint8_t>& b, const CMat& m) {
  for (const cplx& v : m.a) {
    put_f64(b, v.real());
    put_f64(b, v.imag());
  }
}

CMat read_cmat(Reader& r, int rows, int cols) {
  CMat m(rows, cols);
  for (cplx& v : m.a) {
    const double re = r.f64();
    const double im = r.f64();
    v = cplx(re, im);
  }
  return m;
}

}  // namespace

std::vector<uint8_t> encode_records(const std::vector<CsiSample>& samples) {
  std::vector<uint8_t> out;
  for (const CsiSample& s : samples) {
    s.validate();
    uint8_t flags = 0;
    for (int u = 0; u < kNumUtilities; ++u)
      if (s.labels[u]) flags |= static_cast<uint8_t>(1u << u);
    put_u64(out, s.id);
    put_u16(out, static_cast<uint16_t>(s.k_users));
    put_u16(out, static_cast<uint16_t>(s.n_antennas));
    out.push_back(flags);
    put_cmat(out, s.h);
    for (double n : s.noise_power) put_f64(out, n);
    put_f64(out, s.p_max);
    for (int u = 0; u < kNumUtilities; ++u)
      if (s.labels[u]) put_cmat(out, *s.labels[u]);
  }
  return out;
}

std::vector<CsiSample> decode_records(const std::vector<uint8_t>& bytes) {
  Reader r{bytes};
  std::vector<CsiSample> out;
  while (!r.eof()) {
    r.record_index = out.size();
    CsiSample s;
    s.id = r.u64();
    s.k_users = r.u16();
    s.n_antennas = r.u16();
    const uint8_t flags = r.u8();
    if (s.k_users < 1 || s.n_antennas < 1)
      throw std::runtime_error("dataset corrupt in record " +
                               std::to_string(r.record_index) + ": bad dims");
    s.h = read_cmat(r, s.k_users, s.n_antennas);
    s.noise_power.resize(s.k_users);
    for (double& n : s.noise_power) n = r.f64();
    s.p_max = r.f64();
    for (int u = 0; u < kNumUtilities; ++u)
      if (flags & (1u << u)) s.labels[u] = read_cmat(r, s.k_users, s.n_antennas);
    out.push_back(std::move(s));
  }
  return out;
}

std::string encode_manifest(const DatasetManifest& m) {
  m.validate();
  std::ostringstream o;
  o << "format_version=" << kDatasetFormatVersion << "\n";
  o << "generator_version=" << m.generator_version << "\n";
  o << "seed=" << m.seed << "\n";
  o << "split=" << m.split << "\n";
  o << "records=" << m.records << "\n";
  o << "count.train=" << m.count_train << "\n";
  o << "count.val=" << m.count_val << "\n";
  o << "count.test=" << m.count_test << "\n";
  o << "split_ratio=" << fmt_double(m.ratio_train) << "," << fmt_double(m.ratio_val) << ","
    << fmt_double(m.ratio_test) << "\n";
  o << "task.utility=" << utility_name(m.task.util) << "\n";
  o << "task.k=" << m.task.k_users << "\n";
  o << "task.nt=" << m.task.n_antennas << "\n";
  o << "task.p_max=" << fmt_double(m.task.p_max) << "\n";
  o << "task.p_c=" << fmt_double(m.task.p_circuit) << "\n";
  o << "noise_power=" << fmt_double(m.noise_power) << "\n";
  if (m.error_level_db) o << "error_level_db=" << fmt_double(*m.error_level_db) << "\n";
  for (int u = 0; u < kNumUtilities; ++u)
    if (!m.solver_version[u].empty())
      o << "solver." << utility_name(static_cast<Utility>(u)) << "="
        << m.solver_version[u] << "\n";
  return o.str();
}

DatasetManifest decode_manifest(const std::string& text) {
  DatasetManifest m;
  bool saw_version = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("manifest line lacks '=': " + line);
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "format_version") {
      saw_version = true;
      if (std::stoul(val) != kDatasetFormatVersion)
        throw std::runtime_error("dataset format version mismatch: got " + val +
                                 ", expected " + std::to_string(kDatasetFormatVersion));
    } else if (key == "generator_version") {
      m.generator_version = val;
    } else if (key == "seed") {
      m.seed = std::stoull(val);
    } else if (key == "split") {
      m.split = val;
    } else if (key == "records") {
      m.records = std::stoull(val);
    } else if (key == "count.train") {
      m.count_train = std::stoull(val);
    } else if (key == "count.val") {
      m.count_val = std::stoull(val);
    } else if (key == "count.test") {
      m.count_test = std::stoull(val);
    } else if (key == "split_ratio") {
      if (std::sscanf(val.c_str(), "%lf,%lf,%lf", &m.ratio_train, &m.ratio_val,
                      &m.ratio_test) != 3)
        throw std::runtime_error("bad split_ratio: " + val);
    } else if (key == "task.utility") {
      m.task.util = utility_from_name(val);
    } else if (key == "task.k") {
      m.task.k_users = std::stoi(val);
    } else if (key == "task.nt") {
      m.task.n_antennas = std::stoi(val);
    } else if (key == "task.p_max") {
      m.task.p_max = std::stod(val);
    } else if (key == "task.p_c") {
      m.task.p_circuit = std::stod(val);
    } else if (key == "noise_power") {
      m.noise_power = std::stod(val);
    } else if (key == "error_level_db") {
      m.error_level_db = std::stod(val);
    } else if (key.rfind("solver.", 0) == 0) {
      m.solver_version[static_cast<int>(utility_from_name(key.substr(7)))] = val;
    } else {
      throw std::runtime_error("unknown manifest key: " + key);
    }
  }
  if (!saw_version) throw std::runtime_error("manifest lacks format_version");
  m.validate();
  return m;
}

void write_dataset(const std::vector<CsiSample>& samples, const DatasetManifest& manifest,
                   const std::string& path) {
  if (manifest.records != samples.size())
    throw std::invalid_argument("manifest records (" + std::to_string(manifest.records) +
                                ") != sample count (" + std::to_string(samples.size()) + ")");
  const std::vector<uint8_t> bytes = encode_records(samples);
  const std::string mtext = encode_manifest(manifest);
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
  }
  {
    std::ofstream f(manifest_path(path), std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for write: " + manifest_path(path));
    f << mtext;
    if (!f) throw std::runtime_error("write failed: " + manifest_path(path));
  }
}

std::pair<std::vector<CsiSample>, DatasetManifest> read_dataset(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
  std::ifstream mf(manifest_path(path), std::ios::binary);
  if (!mf) throw std::runtime_error("cannot open: " + manifest_path(path));
  std::string mtext((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());

  DatasetManifest manifest = decode_manifest(mtext);
  std::vector<CsiSample> samples = decode_records(bytes);
  if (manifest.records != samples.size())
    throw std::runtime_error("manifest/sample count mismatch: manifest says " +
                             std::to_string(manifest.records) + ", file holds " +
                             std::to_string(samples.size()));
  return {std::move(samples), std::move(manifest)};
}

}  // namespace mubeam
