#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mubeam/csi.hpp"

namespace mubeam {

// Record stream format "ds-v1", little-endian:
//   header  : id u64, K u16, N_T u16, flags u8
//   payload : 2*K*N_T f64 channel ([re, im] pairs, row-major),
//             K f64 noise powers, 1 f64 p_max,
//             one 2*K*N_T f64 label block per flag bit (EE=1, SR=2, MR=4).
// The manifest is UTF-8 key=value text stored next to the record file at
// `path + ".manifest"`. Writing is canonical: identical inputs produce
// byte-identical files.
inline constexpr uint32_t kDatasetFormatVersion = 1;

inline std::string manifest_path(const std::string& record_path) {
  return record_path + ".manifest";
}

void write_dataset(const std::vector<CsiSample>& samples, const DatasetManifest& manifest,
                   const std::string& path);

std::pair<std::vector<CsiSample>, DatasetManifest> read_dataset(const std::string& path);

// In-memory encodings, used by write/read and by byte-identity tests.
std::vector<uint8_t> encode_records(const std::vector<CsiSample>& samples);
std::string encode_manifest(const DatasetManifest& manifest);
std::vector<CsiSample> decode_records(const std::vector<uint8_t>& bytes);
DatasetManifest decode_manifest(const std::string& text);

}  // namespace mubeam
