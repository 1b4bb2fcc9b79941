#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capdual/simplicial_complex.hpp"

namespace capdual {

/// Expected invariants of a zoo complex. These were derived through the
/// rank/SNF oracle before being frozen here; the test suite re-derives them
/// on every run rather than trusting the table.
struct ZooExpected {
    std::vector<Index> f;
    bool orientable = false;
    std::vector<Index> betti_z;                // per degree (empty for mod-2 only entries)
    std::vector<std::vector<long>> torsion_z;  // per degree, invariant factors > 1
    std::vector<Index> betti_mod2;
};

struct ZooEntry {
    std::string name;
    bool file_backed = false;
    std::string filename;  // relative to the data directory
    uint64_t checksum = 0;  // FNV-1a 64 of the file bytes
    ZooExpected expected;
};

const std::vector<ZooEntry>& zoo_entries();
const ZooEntry& zoo_entry(const std::string& name);

/// Returns the named complex. File-backed entries are loaded from data_dir,
/// checksum-verified, and validated as closed pseudomanifolds on load.
SimplicialComplex get_complex(const std::string& name, const std::string& data_dir = "data");

}  // namespace capdual
