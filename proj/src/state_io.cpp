// Copyright 2026 The gqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gqc/simulator.hpp"

namespace gqc {

namespace {

constexpr char kMagic[4] = {'G', 'Q', 'C', 'S'};

void put_u32(std::string &out, std::uint32_t v) {
    for (int i = 0; i < 4; i++) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
}

void put_f64(std::string &out, double x) {
    auto v = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; i++) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
}

std::uint64_t get_le(const std::string &in, std::size_t at, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; i++) {
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[at + i])) << (8 * i);
    }
    return v;
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        fail(ErrorCode::kIo, "cannot open " + path);
    }
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

ChainLayout layout_from(std::uint64_t v) {
    if (v > 1) {
        fail(ErrorCode::kParse, "unknown chain layout " + std::to_string(v));
    }
    return static_cast<ChainLayout>(v);
}

const char *layout_name(ChainLayout layout) {
    return layout == ChainLayout::kSingle ? "single" : "data+ancilla";
}

DenseState decode_binary(const std::string &bytes) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        fail(ErrorCode::kParse, "not a binary state snapshot");
    }
    int d = static_cast<int>(get_le(bytes, 4, 4));
    int n = static_cast<int>(get_le(bytes, 8, 4));
    ChainLayout layout = layout_from(get_le(bytes, 12, 4));
    int total = layout == ChainLayout::kSingle ? n : 2 * n;
    std::size_t dim = checked_dimension(d, total);
    if (bytes.size() != 16 + dim * 16) {
        fail(ErrorCode::kParse, "snapshot length does not match its header");
    }
    CVector amps(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; i++) {
        double re = std::bit_cast<double>(get_le(bytes, 16 + 16 * i, 8));
        double im = std::bit_cast<double>(get_le(bytes, 24 + 16 * i, 8));
        amps(static_cast<Eigen::Index>(i)) = cplx(re, im);
    }
    return DenseState::from_amplitudes(d, n, layout, std::move(amps));
}

}  // namespace

void write_state_binary(const DenseState &state, const std::string &path) {
    std::string out(kMagic, 4);
    put_u32(out, static_cast<std::uint32_t>(state.dim()));
    put_u32(out, static_cast<std::uint32_t>(state.num_sites()));
    put_u32(out, static_cast<std::uint32_t>(state.layout()));
    for (Eigen::Index i = 0; i < state.amplitudes().size(); i++) {
        put_f64(out, state.amplitudes()(i).real());
        put_f64(out, state.amplitudes()(i).imag());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !f.write(out.data(), static_cast<std::streamsize>(out.size()))) {
        fail(ErrorCode::kIo, "cannot write " + path);
    }
}

DenseState read_state_binary(const std::string &path) {
    return decode_binary(slurp(path));
}

std::string format_state_text(const DenseState &state) {
    std::ostringstream os;
    os.precision(17);
    os << "# d=" << state.dim() << " N=" << state.num_sites() << " layout=" << layout_name(state.layout()) << "\n";
    for (Eigen::Index i = 0; i < state.amplitudes().size(); i++) {
        cplx a = state.amplitudes()(i);
        if (a != cplx(0.0)) {
            os << i << " " << a.real() << " " << a.imag() << "\n";
        }
    }
    return os.str();
}

DenseState parse_state_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int d = 0, n = 0;
    ChainLayout layout = ChainLayout::kSingle;
    bool have_header = false;
    std::vector<std::pair<long long, cplx>> entries;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            char name[32] = {0};
            if (std::sscanf(line.c_str(), "# d=%d N=%d layout=%31s", &d, &n, name) == 3) {
                std::string l(name);
                if (l == "single") {
                    layout = ChainLayout::kSingle;
                } else if (l == "data+ancilla") {
                    layout = ChainLayout::kDataPlusAncilla;
                } else {
                    fail(ErrorCode::kParse, "unknown layout '" + l + "'");
                }
                have_header = true;
            }
            continue;
        }
        long long idx = 0;
        double re = 0, im = 0;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%lld %lf %lf %c", &idx, &re, &im, &tail) != 3) {
            fail(ErrorCode::kParse, "expected 'index re im' on state line " + std::to_string(line_no));
        }
        entries.emplace_back(idx, cplx(re, im));
    }
    if (!have_header) {
        fail(ErrorCode::kParse, "state text needs a '# d=<d> N=<N> layout=<single|data+ancilla>' header");
    }
    DenseState s(d, n, layout);
    s.amplitudes().setZero();
    for (auto &[idx, a] : entries) {
        if (idx < 0 || idx >= s.amplitudes().size()) {
            fail(ErrorCode::kParse, "amplitude index " + std::to_string(idx) + " out of range");
        }
        s.amplitudes()(static_cast<Eigen::Index>(idx)) = a;
    }
    return DenseState::from_amplitudes(d, n, layout, s.amplitudes());
}

DenseState read_state_file(const std::string &path) {
    std::string bytes = slurp(path);
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) {
        return decode_binary(bytes);
    }
    return parse_state_text(bytes);
}

}  // namespace gqc
