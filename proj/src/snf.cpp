#include "chromhom/snf.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <type_traits>

namespace chromhom {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can restart in GMP.
void sub_mul(std::int64_t& a, std::int64_t q, std::int64_t b) {
    std::int64_t p;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &a)) throw Overflow{};
}
void sub_mul(Integer& a, const Integer& q, const Integer& b) {
    mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}
std::int64_t quotient(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN && b == -1) throw Overflow{};
    return a / b;
}
Integer quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
std::int64_t negate(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
}
Integer negate(const Integer& a) { return -a; }
bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
bool is_unit(const Integer& a) { return a == 1 || a == -1; }
bool abs_less(std::int64_t a, std::int64_t b) {
    auto mag = [](std::int64_t x) { return x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x); };
    return mag(a) < mag(b);
}
bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
Integer to_integer(std::int64_t a) { return from_int64(a); }
Integer to_integer(const Integer& a) { return a; }

template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

// Sparse elimination over Z. Vectors are the columns of the input matrix;
// positions are its row indices.
template <class T>
class Eliminator {
public:
    Eliminator(int positions, std::vector<std::size_t> weight)
        : acc_(static_cast<std::size_t>(positions)),
          touched_flag_(static_cast<std::size_t>(positions), 0),
          pivot_of_(static_cast<std::size_t>(positions), -1),
          weight_(std::move(weight)) {}

    // Reduces against all pivots; returns true if the vector became a pivot.
    bool absorb(SparseVec<T>& vec) {
        vec = reduce(vec);
        int best = -1;
        for (std::size_t k = 0; k < vec.size(); ++k) {
            if (!is_unit(vec[k].second)) continue;
            if (best < 0 || weight_[vec[k].first] < weight_[vec[best].first]) best = static_cast<int>(k);
        }
        if (best < 0) return false;
        const int pos = vec[best].first;
        pivot_of_[pos] = static_cast<int>(pivots_.size());
        pivots_.push_back({pos, vec[best].second, std::move(vec)});
        queued_.push_back(0);
        vec.clear();
        return true;
    }

    std::size_t pivot_count() const { return pivots_.size(); }

private:
    struct Pivot {
        int pos;
        T value;
        SparseVec<T> vec;
    };

    void touch(int pos) {
        if (!touched_flag_[pos]) {
            touched_flag_[pos] = 1;
            touched_.push_back(pos);
        }
    }

    void enqueue(int pos, std::priority_queue<int, std::vector<int>, std::greater<>>& heap) {
        const int p = pivot_of_[pos];
        if (p >= 0 && !queued_[p]) {
            queued_[p] = 1;
            heap.push(p);
        }
    }

    SparseVec<T> reduce(const SparseVec<T>& vec) {
        std::priority_queue<int, std::vector<int>, std::greater<>> heap;
        for (const auto& [pos, v] : vec) {
            touch(pos);
            acc_[pos] = v;
            enqueue(pos, heap);
        }
        // Pivot k is zero at the positions of pivots created before it, so
        // processing pivots in creation order never revisits one.
        while (!heap.empty()) {
            const int p = heap.top();
            heap.pop();
            queued_[p] = 0;
            const Pivot& piv = pivots_[p];
            if (acc_[piv.pos] == 0) continue;
            const T factor = piv.value == 1 ? acc_[piv.pos] : negate(acc_[piv.pos]);
            for (const auto& [pos, x] : piv.vec) {
                touch(pos);
                sub_mul(acc_[pos], factor, x);
                if (pos != piv.pos) enqueue(pos, heap);
            }
        }
        SparseVec<T> out;
        for (int pos : touched_) {
            if (acc_[pos] != 0) out.emplace_back(pos, acc_[pos]);
            acc_[pos] = 0;
            touched_flag_[pos] = 0;
        }
        touched_.clear();
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    std::vector<T> acc_;
    std::vector<char> touched_flag_;
    std::vector<int> touched_;
    std::vector<int> pivot_of_;
    std::vector<std::size_t> weight_;
    std::vector<Pivot> pivots_;
    std::vector<char> queued_;
};

// Diagonalizes the remaining vectors with the minimal-magnitude entry as pivot
// (ties: lowest vector, then lowest position). Returns the diagonal.
template <class T>
std::vector<Integer> diagonalize(std::vector<SparseVec<T>> vectors) {
    std::vector<std::map<int, T>> rows;
    for (auto& v : vectors)
        if (!v.empty()) rows.emplace_back(v.begin(), v.end());
    std::vector<Integer> diagonal;
    std::vector<char> alive(rows.size(), 1);

    while (true) {
        int pr = -1, pc = -1;
        const T* pv = nullptr;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                if (!pv || abs_less(v, *pv)) {
                    pr = static_cast<int>(r);
                    pc = c;
                    pv = &v;
                }
            }
        }
        if (!pv) break;
        const T pivot = *pv;
        const std::map<int, T> pivot_row = rows[pr];

        bool clean = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || static_cast<int>(r) == pr) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            const T q = quotient(it->second, pivot);
            if (q != 0) {
                for (const auto& [c, x] : pivot_row) {
                    T& slot = rows[r][c];
                    sub_mul(slot, q, x);
                    if (slot == 0) rows[r].erase(c);
                }
            }
            if (rows[r].count(pc)) clean = false;
        }
        if (!clean) continue;

        // Column pc now only meets the pivot row, so column operations only
        // touch that row.
        auto& row = rows[pr];
        for (auto it = row.begin(); it != row.end();) {
            if (it->first == pc) {
                ++it;
                continue;
            }
            const T q = quotient(it->second, pivot);
            sub_mul(it->second, q, pivot);
            if (it->second == 0) {
                it = row.erase(it);
            } else {
                clean = false;
                ++it;
            }
        }
        if (!clean) continue;
        diagonal.push_back(to_integer(pivot));
        alive[pr] = 0;
    }
    return diagonal;
}

template <class T>
SNFResult run(const IntMatrix& m, const SNFOptions& options) {
    std::vector<std::size_t> weight(static_cast<std::size_t>(m.rows()), 0);
    std::vector<SparseVec<T>> vectors;
    vectors.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
        SparseVec<T> v;
        for (const auto& [r, x] : m.column(c)) {
            ++weight[r];
            if constexpr (std::is_same_v<T, std::int64_t>) {
                auto small = to_int64(x);
                if (!small) throw Overflow{};
                v.emplace_back(r, *small);
            } else {
                v.emplace_back(r, x);
            }
        }
        if (!v.empty()) vectors.push_back(std::move(v));
    }
    std::stable_sort(vectors.begin(), vectors.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::size_t units = 0;
    if (options.unit_phase) {
        Eliminator<T> elim(m.rows(), std::move(weight));
        std::vector<SparseVec<T>> residual;
        for (auto& v : vectors)
            if (!elim.absorb(v) && !v.empty()) residual.push_back(std::move(v));
        // Residuals may meet pivots created after them; repeat until stable.
        bool progress = true;
        while (progress && !residual.empty()) {
            progress = false;
            std::vector<SparseVec<T>> next;
            for (auto& v : residual) {
                if (elim.absorb(v))
                    progress = true;
                else if (!v.empty())
                    next.push_back(std::move(v));
            }
            residual = std::move(next);
        }
        units = elim.pivot_count();
        vectors = std::move(residual);
    }

    auto factors = invariant_factors_from_diagonal(diagonalize<T>(std::move(vectors)));
    SNFResult result;
    result.rank = units + factors.size();
    for (auto& f : factors)
        if (f > 1) result.torsion.push_back(std::move(f));
    return result;
}

}  // namespace

std::vector<Integer> SNFResult::factors() const {
    std::vector<Integer> out(rank - torsion.size(), Integer(1));
    out.insert(out.end(), torsion.begin(), torsion.end());
    return out;
}

std::vector<Integer> invariant_factors_from_diagonal(std::vector<Integer> d) {
    std::erase_if(d, [](const Integer& x) { return x == 0; });
    for (auto& x : d) x = abs(x);
    std::sort(d.begin(), d.end());
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i] == 1) break;
            Integer g = gcd(d[i], d[j]);
            if (g == d[i]) continue;
            Integer l = d[i] / g * d[j];
            d[i] = std::move(g);
            d[j] = std::move(l);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

SNFResult smith_normal_form(const IntMatrix& m, const SNFOptions& options) {
    if (options.try_int64) {
        try {
            return run<std::int64_t>(m, options);
        } catch (const Overflow&) {
        }
    }
    return run<Integer>(m, options);
}

}  // namespace chromhom
