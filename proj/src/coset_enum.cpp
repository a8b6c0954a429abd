#include "schurkit/coset_enum.hpp"

#include <cstdlib>
#include <sstream>

#include "schurkit/errors.hpp"

namespace schurkit {

std::uint32_t CosetTable::trace(std::uint32_t c, const Word& w) const {
    for (const Letter& l : w) {
        const int col = 2 * l.gen + (l.exp < 0 ? 1 : 0);
        for (std::int64_t k = l.exp < 0 ? -l.exp : l.exp; k > 0; --k) c = act(c, col);
    }
    return c;
}

std::string CosetTable::dump() const {
    std::ostringstream os;
    os << "cosets " << cosets << "\ngens " << ngens << "\n";
    for (std::uint32_t c = 0; c < cosets; ++c) {
        for (int x = 0; x < columns(); ++x) os << (x ? " " : "") << act(c, x) + 1;
        os << "\n";
    }
    return os.str();
}

std::uint32_t default_budget() {
    if (const char* s = std::getenv("SCHURKIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v <= 0xffffffffULL) return static_cast<std::uint32_t>(v);
        throw ValidationError("SCHURKIT_BUDGET must be a positive integer");
    }
    return 2'000'000;
}

namespace {

using Col = std::uint16_t;

class Enumerator {
  public:
    Enumerator(int ngens, std::vector<std::vector<Col>> rels, std::uint32_t budget, bool lookahead)
        : ncols_(2 * ngens), rels_(std::move(rels)), capacity_(budget), lookahead_(lookahead) {
        grow(1);
        top_ = 1;
        p_[1] = 1;
        nxt_[1] = 0;
        prv_[1] = 0;
        last_ = 1;
        live_ = 1;
        stats_.defined = 1;
        stats_.max_live = 1;
    }

    bool run(const std::vector<std::vector<Col>>& subgroup) {
        if (capacity_ < 1) return false;
        for (const auto& w : subgroup) {
            for (;;) {
                const Status s = scan_and_fill(1, w);
                if (s == Status::ok) break;
                if (!make_room()) return false;
            }
        }
        cur_ = 1;
        while (cur_ != 0) {
            bool restart = false;
            for (std::size_t r = 0; r < rels_.size() && alive(cur_); ++r) {
                if (scan_and_fill(cur_, rels_[r]) == Status::need_space) {
                    if (!make_room()) return false;
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            if (alive(cur_)) {
                bool full = true;
                for (int x = 0; x < ncols_ && alive(cur_); ++x)
                    if (!at(cur_, x) && !define(cur_, x)) {
                        full = false;
                        break;
                    }
                if (!full) {
                    if (!make_room()) return false;
                    continue;
                }
            }
            // advance to the next live coset
            std::uint32_t c = cur_;
            if (alive(c)) {
                c = nxt_[c];
            } else {
                while (c != 0 && !alive(c)) c = nxt_[c];
            }
            cur_ = c;
        }
        return true;
    }

    CosetTable table() {
        compact();
        CosetTable t;
        t.ngens = ncols_ / 2;
        t.cosets = live_;
        t.entries.resize(std::size_t(live_) * ncols_);
        for (std::uint32_t c = 1; c <= live_; ++c)
            for (int x = 0; x < ncols_; ++x) {
                const std::uint32_t d = at(c, x);
                if (!d) throw InternalError("coset table incomplete after enumeration");
                t.entries[std::size_t(c - 1) * ncols_ + x] = d - 1;
            }
        return t;
    }

    const EnumStats& stats() const { return stats_; }

  private:
    enum class Status { ok, need_space };

    int ncols_;
    std::vector<std::vector<Col>> rels_;
    std::uint32_t capacity_;
    bool lookahead_;
    std::vector<std::uint32_t> tab_, p_, nxt_, prv_;
    std::uint32_t top_ = 0, last_ = 0, live_ = 0, cur_ = 0;
    std::vector<std::uint32_t> queue_;
    EnumStats stats_;

    std::uint32_t& at(std::uint32_t c, int x) { return tab_[std::size_t(c) * ncols_ + x]; }
    bool alive(std::uint32_t c) const { return p_[c] == c; }

    void grow(std::uint32_t need) {
        if (p_.size() > need) return;
        std::size_t n = std::max<std::size_t>(need + 1, p_.size() * 2);
        n = std::min<std::size_t>(n, std::size_t(capacity_) + 1);
        n = std::max<std::size_t>(n, need + 1);
        tab_.resize(n * ncols_, 0);
        p_.resize(n, 0);
        nxt_.resize(n, 0);
        prv_.resize(n, 0);
    }

    bool define(std::uint32_t c, int x) {
        if (top_ >= capacity_) return false;
        const std::uint32_t d = ++top_;
        grow(d);
        std::fill_n(&tab_[std::size_t(d) * ncols_], ncols_, 0);
        p_[d] = d;
        nxt_[d] = 0;
        prv_[d] = last_;
        nxt_[last_] = d;
        last_ = d;
        ++live_;
        ++stats_.defined;
        stats_.max_live = std::max(stats_.max_live, live_);
        at(c, x) = d;
        at(d, x ^ 1) = c;
        return true;
    }

    std::uint32_t rep(std::uint32_t k) {
        std::uint32_t l = k;
        while (p_[l] != l) l = p_[l];
        while (p_[k] != l) {
            const std::uint32_t n = p_[k];
            p_[k] = l;
            k = n;
        }
        return l;
    }

    void merge(std::uint32_t k, std::uint32_t l) {
        const std::uint32_t a = rep(k), b = rep(l);
        if (a == b) return;
        const std::uint32_t mu = std::min(a, b), nu = std::max(a, b);
        p_[nu] = mu;
        // unlink nu; its nxt pointer is kept so a scan positioned on it can move on
        nxt_[prv_[nu]] = nxt_[nu];
        if (nxt_[nu]) prv_[nxt_[nu]] = prv_[nu];
        else last_ = prv_[nu];
        --live_;
        ++stats_.coincidences;
        queue_.push_back(nu);
    }

    void coincidence(std::uint32_t a, std::uint32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const std::uint32_t g = queue_[i];
            for (int x = 0; x < ncols_; ++x) {
                const std::uint32_t d = at(g, x);
                if (!d) continue;
                at(d, x ^ 1) = 0;
                const std::uint32_t mu = rep(g), nu = rep(d);
                if (at(mu, x)) {
                    merge(nu, at(mu, x));
                } else if (at(nu, x ^ 1)) {
                    merge(mu, at(nu, x ^ 1));
                } else {
                    at(mu, x) = nu;
                    at(nu, x ^ 1) = mu;
                }
            }
        }
    }

    Status scan_and_fill(std::uint32_t a, const std::vector<Col>& w) {
        if (w.empty()) return Status::ok;
        std::uint32_t f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i])) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return Status::ok;
            }
            while (j >= i && at(b, w[j] ^ 1)) b = at(b, w[j--] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return Status::ok;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                return Status::ok;
            }
            if (!define(f, w[i])) return Status::need_space;
        }
    }

    // Scan without defining: deductions from single gaps and coincidences only.
    void scan(std::uint32_t a, const std::vector<Col>& w) {
        if (w.empty()) return;
        std::uint32_t f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (i <= j && at(f, w[i])) f = at(f, w[i++]);
        if (i > j) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (j >= i && at(b, w[j] ^ 1)) b = at(b, w[j--] ^ 1);
        if (j < i) {
            coincidence(f, b);
        } else if (i == j) {
            at(f, w[i]) = b;
            at(b, w[i] ^ 1) = f;
        }
    }

    void lookahead() {
        ++stats_.lookaheads;
        for (std::uint32_t c = 1; c != 0;) {
            for (std::size_t r = 0; r < rels_.size() && alive(c); ++r) scan(c, rels_[r]);
            if (alive(c)) {
                c = nxt_[c];
            } else {
                while (c != 0 && !alive(c)) c = nxt_[c];
            }
        }
    }

    // Renumber the live cosets 1..live in list order.
    void compact() {
        if (top_ == live_) return;
        std::vector<std::uint32_t> map(top_ + 1, 0);
        std::uint32_t n = 0;
        for (std::uint32_t c = 1; c != 0; c = nxt_[c]) map[c] = ++n;
        if (cur_ && !alive(cur_)) {
            std::uint32_t c = cur_;
            while (c != 0 && !alive(c)) c = nxt_[c];
            cur_ = c;
        }
        for (std::uint32_t c = 1; c <= top_; ++c) {
            if (!alive(c)) continue;
            const std::uint32_t nc = map[c];
            for (int x = 0; x < ncols_; ++x) {
                const std::uint32_t d = at(c, x);
                tab_[std::size_t(nc) * ncols_ + x] = d ? map[d] : 0;
            }
        }
        for (std::uint32_t c = 1; c <= n; ++c) {
            p_[c] = c;
            prv_[c] = c - 1;
            nxt_[c] = c < n ? c + 1 : 0;
        }
        cur_ = cur_ ? map[cur_] : 0;
        top_ = n;
        last_ = n;
    }

    bool make_room() {
        if (!lookahead_) return false;
        lookahead();
        compact();
        return top_ < capacity_;
    }
};

std::vector<Col> columns_of(const Word& w, int ngens) {
    std::vector<Col> out;
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= ngens) throw ValidationError("relator letter out of range");
        const Col c = static_cast<Col>(2 * l.gen + (l.exp < 0 ? 1 : 0));
        for (std::int64_t k = l.exp < 0 ? -l.exp : l.exp; k > 0; --k) out.push_back(c);
    }
    return out;
}

}  // namespace

EnumResult enumerate_cosets(const FpPresentation& fp, const std::vector<Word>& subgroup, const EnumOptions& opts) {
    fp.validate();
    if (fp.ngens > 30000) throw ValidationError("too many generators");
    std::vector<std::vector<Col>> rels, sub;
    for (const Word& r : fp.relators) {
        auto c = columns_of(free_reduce(r), fp.ngens);
        if (!c.empty()) rels.push_back(std::move(c));
    }
    for (const Word& s : subgroup) sub.push_back(columns_of(free_reduce(s), fp.ngens));
    EnumResult res;
    if (fp.ngens == 0) {
        res.complete = true;
        res.table.ngens = 0;
        res.table.cosets = 1;
        res.stats.defined = 1;
        res.stats.max_live = 1;
        return res;
    }
    Enumerator e(fp.ngens, std::move(rels), opts.budget, opts.lookahead);
    res.complete = e.run(sub);
    if (res.complete) res.table = e.table();
    res.stats = e.stats();
    return res;
}

}  // namespace schurkit
