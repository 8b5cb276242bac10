// Copyright 2026 The pst Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "pst/errors.hpp"
#include "pst/postsel/circuit.hpp"

namespace pst::postsel {

/// A bit that is an affine function of hidden uniform random bits:
/// constant XOR parity(vars & r).
struct AffineBit {
    std::uint64_t vars = 0;
    bool constant = false;

    AffineBit &operator^=(const AffineBit &o) {
        vars ^= o.vars;
        constant ^= o.constant;
        return *this;
    }
    AffineBit &operator^=(bool b) {
        constant ^= b;
        return *this;
    }
};

/// Aaronson-Gottesman tableau whose row signs are affine in the random
/// outcomes drawn so far, so a single pass yields every measurement record
/// as an affine function of independent fair coins.
class SymbolicTableau {
  public:
    explicit SymbolicTableau(int n) : n_(n), x_(2 * n), z_(2 * n), sign_(2 * n) {
        for (int i = 0; i < n; ++i) {
            x_[i] = bit(i);           // destabilizer X_i
            z_[n + i] = bit(i);       // stabilizer Z_i
        }
    }

    void h(int q) {
        for (int r = 0; r < 2 * n_; ++r) {
            const bool xq = get(x_[r], q);
            const bool zq = get(z_[r], q);
            sign_[r] ^= xq && zq;
            set(x_[r], q, zq);
            set(z_[r], q, xq);
        }
    }

    void s(int q) {
        for (int r = 0; r < 2 * n_; ++r) {
            const bool xq = get(x_[r], q);
            sign_[r] ^= xq && get(z_[r], q);
            if (xq) {
                z_[r] ^= bit(q);
            }
        }
    }

    void cnot(int c, int t) {
        for (int r = 0; r < 2 * n_; ++r) {
            const bool xc = get(x_[r], c);
            const bool xt = get(x_[r], t);
            const bool zc = get(z_[r], c);
            const bool zt = get(z_[r], t);
            sign_[r] ^= xc && zt && (xt == zc);
            if (xc) {
                x_[r] ^= bit(t);
            }
            if (zt) {
                z_[r] ^= bit(c);
            }
        }
    }

    void cz(int a, int b) {
        h(b);
        cnot(a, b);
        h(b);
    }

    AffineBit measure_z(int q) {
        int p = -1;
        for (int r = n_; r < 2 * n_; ++r) {
            if (get(x_[r], q)) {
                p = r;
                break;
            }
        }
        if (p >= 0) {
            for (int r = 0; r < 2 * n_; ++r) {
                if (r != p && get(x_[r], q)) {
                    rowsum(r, p);
                }
            }
            x_[p - n_] = x_[p];
            z_[p - n_] = z_[p];
            sign_[p - n_] = sign_[p];
            x_[p] = 0;
            z_[p] = bit(q);
            if (next_var_ >= 64) {
                throw ResourceError("more than 64 random measurement outcomes");
            }
            sign_[p] = AffineBit{std::uint64_t{1} << next_var_++, false};
            return sign_[p];
        }
        std::uint64_t sx = 0;
        std::uint64_t sz = 0;
        AffineBit ss;
        for (int i = 0; i < n_; ++i) {
            if (get(x_[i], q)) {
                rowsum_into(sx, sz, ss, n_ + i);
            }
        }
        return ss;
    }

    AffineBit measure_x(int q) {
        h(q);
        AffineBit out = measure_z(q);
        h(q);
        return out;
    }

    /// Resets q to |0>: measure, then undo a 1 outcome with a controlled X.
    void reset_z(int q) {
        const AffineBit m = measure_z(q);
        for (int r = 0; r < 2 * n_; ++r) {
            if (get(z_[r], q)) {
                sign_[r] ^= m;
            }
        }
    }

    int random_bits() const { return next_var_; }

  private:
    static std::uint64_t bit(int q) { return std::uint64_t{1} << q; }
    static bool get(std::uint64_t m, int q) { return (m >> q) & 1; }
    static void set(std::uint64_t &m, int q, bool v) { m = (m & ~bit(q)) | (std::uint64_t{v} << q); }

    // Exponent of i picked up when multiplying Pauli (x1,z1) by (x2,z2).
    static int phase_g(bool x1, bool z1, bool x2, bool z2) {
        if (!x1 && !z1) {
            return 0;
        }
        if (x1 && z1) {
            return static_cast<int>(z2) - static_cast<int>(x2);
        }
        if (x1) {
            return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
        }
        return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
    }

    void rowsum_into(std::uint64_t &hx, std::uint64_t &hz, AffineBit &hs, int i) const {
        int g = 0;
        for (int q = 0; q < n_; ++q) {
            g += phase_g(get(x_[i], q), get(z_[i], q), get(hx, q), get(hz, q));
        }
        g = ((g % 4) + 4) % 4;
        hs ^= sign_[i];
        hs ^= (g == 2);
        hx ^= x_[i];
        hz ^= z_[i];
    }

    void rowsum(int h, int i) { rowsum_into(x_[h], z_[h], sign_[h], i); }

    int n_;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    std::vector<AffineBit> sign_;
    int next_var_ = 0;
};

/// The noiseless measurement record as an affine function of hidden fair
/// coins: records = constant XOR sum_j r_j generators[j]. The record vector
/// is therefore uniform on an affine subspace.
struct IdealOutcomes {
    std::uint64_t constant = 0;
    std::vector<std::uint64_t> generators;
};

inline IdealOutcomes ideal_outcomes(const CliffordCircuit &circuit) {
    SymbolicTableau tab(circuit.num_qubits());
    std::vector<AffineBit> records;
    for (const auto &op : circuit.ops()) {
        switch (op.kind) {
            case OpKind::prep_z:
                tab.reset_z(op.qubits[0]);
                break;
            case OpKind::prep_x:
                tab.reset_z(op.qubits[0]);
                tab.h(op.qubits[0]);
                break;
            case OpKind::h:
                tab.h(op.qubits[0]);
                break;
            case OpKind::s:
                tab.s(op.qubits[0]);
                break;
            case OpKind::identity:
                break;
            case OpKind::cnot:
                tab.cnot(op.qubits[0], op.qubits[1]);
                break;
            case OpKind::cz:
                tab.cz(op.qubits[0], op.qubits[1]);
                break;
            case OpKind::t:
                throw UnsupportedCircuit("non-Clifford gate T is not supported");
            case OpKind::measure_z:
                records.push_back(tab.measure_z(op.qubits[0]));
                break;
            case OpKind::measure_x:
                records.push_back(tab.measure_x(op.qubits[0]));
                break;
            case OpKind::check:
                break;
        }
    }
    IdealOutcomes out;
    for (std::size_t r = 0; r < records.size(); ++r) {
        if (records[r].constant) {
            out.constant |= std::uint64_t{1} << r;
        }
    }
    for (int v = 0; v < tab.random_bits(); ++v) {
        std::uint64_t g = 0;
        for (std::size_t r = 0; r < records.size(); ++r) {
            if ((records[r].vars >> v) & 1) {
                g |= std::uint64_t{1} << r;
            }
        }
        if (g != 0) {
            out.generators.push_back(g);
        }
    }
    return out;
}

/// Row-reduced GF(2) basis; supports span membership.
class Gf2Basis {
  public:
    /// Adds v; returns false if it was already in the span.
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (v == 0) {
            return false;
        }
        rows_.push_back(v);
        return true;
    }

    bool contains(std::uint64_t v) const { return reduce(v) == 0; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::uint64_t> &rows() const { return rows_; }

  private:
    std::uint64_t reduce(std::uint64_t v) const {
        for (std::uint64_t r : rows_) {
            const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(r));
            if (v & lead) {
                v ^= r;
            }
        }
        return v;
    }

    // Each row is zero at the leading bits of all earlier rows.
    std::vector<std::uint64_t> rows_;
};

}  // namespace pst::postsel
