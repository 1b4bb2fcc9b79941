#include "capdual/zoo.hpp"

#include <algorithm>

#include "capdual/io.hpp"

namespace capdual {

namespace {

std::vector<std::vector<long>> sphere2_tops() {
    std::vector<std::vector<long>> tops;
    for (long a = 0; a < 4; ++a)
        for (long b = a + 1; b < 4; ++b)
            for (long c = b + 1; c < 4; ++c) tops.push_back({a, b, c});
    return tops;
}

std::vector<std::vector<long>> sphere3_tops() {
    std::vector<std::vector<long>> tops;
    for (long a = 0; a < 5; ++a)
        for (long b = a + 1; b < 5; ++b)
            for (long c = b + 1; c < 5; ++c)
                for (long d = c + 1; d < 5; ++d) tops.push_back({a, b, c, d});
    return tops;
}

std::vector<std::vector<long>> torus7_tops() {
    std::vector<std::vector<long>> tops;
    for (long i = 0; i < 7; ++i) {
        tops.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tops.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return tops;
}

std::vector<std::vector<long>> projective_plane6_tops() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

std::vector<std::vector<long>> klein_bottle8_tops() {
    return {{0, 1, 4}, {0, 1, 7}, {0, 2, 5}, {0, 2, 6}, {0, 3, 4}, {0, 3, 5},
            {0, 6, 7}, {1, 2, 5}, {1, 2, 7}, {1, 4, 5}, {2, 3, 6}, {2, 3, 7},
            {3, 4, 7}, {3, 5, 6}, {4, 5, 7}, {5, 6, 7}};
}

std::vector<ZooEntry> make_entries() {
    std::vector<ZooEntry> z;
    z.push_back({"sphere2", false, "", 0,
                 {{4, 6, 4}, true, {1, 0, 1}, {{}, {}, {}}, {1, 0, 1}}});
    z.push_back({"sphere3", false, "", 0,
                 {{5, 10, 10, 5}, true, {1, 0, 0, 1}, {{}, {}, {}, {}}, {1, 0, 0, 1}}});
    z.push_back({"torus7", false, "", 0,
                 {{7, 21, 14}, true, {1, 2, 1}, {{}, {}, {}}, {1, 2, 1}}});
    z.push_back({"projective_plane6", false, "", 0,
                 {{6, 15, 10}, false, {1, 0, 0}, {{}, {2}, {}}, {1, 1, 1}}});
    z.push_back({"klein_bottle8", false, "", 0,
                 {{8, 24, 16}, false, {1, 1, 0}, {{}, {2}, {}}, {1, 2, 1}}});
    z.push_back({"genus2_surface", true, "genus2_surface.tri", 0xbb64f97320e5eb58ULL,
                 {{11, 39, 26}, true, {1, 4, 1}, {{}, {}, {}}, {1, 4, 1}}});
    z.push_back({"projective_space11", true, "projective_space11.tri", 0xb9a1f9f5a3c69e99ULL,
                 {{11, 53, 84, 42}, true, {1, 0, 0, 1}, {{}, {2}, {}, {}}, {1, 1, 1, 1}}});
    return z;
}

}  // namespace

const std::vector<ZooEntry>& zoo_entries() {
    static const std::vector<ZooEntry> entries = make_entries();
    return entries;
}

const ZooEntry& zoo_entry(const std::string& name) {
    for (const auto& e : zoo_entries())
        if (e.name == name) return e;
    fail(ErrorCode::UnknownName, "no zoo complex named '" + name + "'");
}

SimplicialComplex get_complex(const std::string& name, const std::string& data_dir) {
    const ZooEntry& e = zoo_entry(name);
    SimplicialComplex k;
    if (e.file_backed) {
        const std::string path = data_dir + "/" + e.filename;
        uint64_t sum = fnv1a64_file(path);
        require(sum == e.checksum, ErrorCode::ChecksumMismatch,
                e.filename + " does not match the recorded checksum");
        k = load_complex_file(path);
        ManifoldCertificate cert = validate_closed_manifold(k);
        require(cert.is_closed_pseudomanifold && cert.is_connected, ErrorCode::NotClosed,
                e.filename + " is not a closed connected pseudomanifold");
    } else if (name == "sphere2") {
        k = build_complex(sphere2_tops());
    } else if (name == "sphere3") {
        k = build_complex(sphere3_tops());
    } else if (name == "torus7") {
        k = build_complex(torus7_tops());
    } else if (name == "projective_plane6") {
        k = build_complex(projective_plane6_tops());
    } else {
        k = build_complex(klein_bottle8_tops());
    }
    return k;
}

}  // namespace capdual
