#include "icx/scheme.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "icx/errors.hpp"

namespace icx {

std::size_t LinearScheme::L(int m) const {
    const auto it = V.find(m);
    return it == V.end() ? 0 : it->second.cols();
}

Rational LinearScheme::rate(int m) const {
    return Rational(static_cast<std::int64_t>(L(m)), static_cast<std::int64_t>(n));
}

RateVector LinearScheme::rates(int num_messages) const {
    RateVector out;
    for (int m = 1; m <= num_messages; ++m) out.push_back(rate(m));
    return out;
}

std::string diagnostic_kind_name(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::missing_decoder: return "missing-decoder";
        case DiagnosticKind::property1: return "property-1";
        case DiagnosticKind::property2: return "property-2";
        case DiagnosticKind::desired_rank: return "desired-rank";
        case DiagnosticKind::resolvability: return "resolvability";
    }
    return "unknown";
}

unsigned default_threads() {
    if (const char* env = std::getenv("ICX_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void check_well_formed(const Instance& inst, const LinearScheme& s) {
    if (s.n < 1) throw SchemeMalformed("block length n must be >= 1");
    for (int m = 1; m <= inst.num_messages; ++m) {
        const auto it = s.V.find(m);
        if (it == s.V.end()) throw SchemeMalformed("no precoder for message " + std::to_string(m));
    }
    for (const auto& [m, v] : s.V) {
        if (m < 1 || m > inst.num_messages) throw SchemeMalformed("precoder for unknown message " + std::to_string(m));
        if (!(v.field() == s.field)) throw SchemeMalformed("V_" + std::to_string(m) + " is over another field");
        if (v.rows() != s.n) throw SchemeMalformed("V_" + std::to_string(m) + " does not have n rows");
    }
    for (const auto& [key, u] : s.U) {
        const auto [m, k] = key;
        const std::string name = "U_" + std::to_string(m) + "@" + std::to_string(k);
        if (m < 1 || m > inst.num_messages) throw SchemeMalformed(name + " names an unknown message");
        if (!(u.field() == s.field)) throw SchemeMalformed(name + " is over another field");
        if (u.cols() != s.n || u.rows() != s.L(m)) throw SchemeMalformed(name + " must be L_m x n");
    }
}

namespace {

Matrix stack_columns(const LinearScheme& s, const std::vector<int>& ids) {
    std::vector<Matrix> blocks;
    blocks.reserve(ids.size());
    for (int m : ids) blocks.push_back(s.V.at(m));
    return hconcat(s.field, s.n, blocks);
}

struct Split {
    std::vector<int> desired;
    std::vector<int> interference;  // not desired, not held
};

Split split_at(const Instance& inst, const Destination& d) {
    Split out;
    for (int i = 1; i <= inst.num_messages; ++i) {
        if (d.wants.count(i))
            out.desired.push_back(i);
        else if (!d.has.count(i))
            out.interference.push_back(i);
    }
    return out;
}

void verify_decoders(const Instance& inst, const LinearScheme& s, VerificationReport& report) {
    for (const Destination& d : inst.destinations) {
        for (int m : d.wants) {
            const auto it = s.U.find({m, d.id});
            if (it == s.U.end()) {
                report.diagnostics.push_back({DiagnosticKind::missing_decoder, m, 0, d.id, "no U for this pair"});
                continue;
            }
            const Matrix& u = it->second;
            for (int i = 1; i <= inst.num_messages; ++i) {
                if (i == m || d.has.count(i)) continue;
                if (!multiply(u, s.V.at(i)).is_zero())
                    report.diagnostics.push_back(
                        {DiagnosticKind::property1, m, i, d.id, "U_{m,k} V_i is not zero"});
            }
            if (rank(multiply(u, s.V.at(m))) != s.L(m))
                report.diagnostics.push_back({DiagnosticKind::property2, m, m, d.id, "U_{m,k} V_m is singular"});
        }
    }
}

void verify_rank(const Instance& inst, const LinearScheme& s, VerificationReport& report) {
    for (const Destination& d : inst.destinations) {
        const Split sp = split_at(inst, d);
        const Matrix vd = stack_columns(s, sp.desired);
        const std::size_t rd = rank(vd);
        std::size_t wanted = 0;
        for (int m : sp.desired) wanted += s.L(m);
        if (rd != wanted) {
            // First desired message whose columns are dependent on the earlier ones.
            int culprit = sp.desired.front();
            std::vector<int> prefix;
            for (int m : sp.desired) {
                prefix.push_back(m);
                std::size_t need = 0;
                for (int p : prefix) need += s.L(p);
                if (rank(stack_columns(s, prefix)) != need) {
                    culprit = m;
                    break;
                }
            }
            report.diagnostics.push_back({DiagnosticKind::desired_rank, culprit, culprit, d.id,
                                          "desired columns have rank " + std::to_string(rd) + " < " +
                                              std::to_string(wanted)});
        }
        const Matrix vi = stack_columns(s, sp.interference);
        const std::size_t ri = rank(vi);
        if (rank(hconcat(vd, vi)) == rd + ri) continue;

        // Locate the first interferer whose addition makes the spans meet.
        std::vector<int> prefix;
        int bad_i = sp.interference.back();
        for (int i : sp.interference) {
            prefix.push_back(i);
            const Matrix vp = stack_columns(s, prefix);
            if (rank(hconcat(vd, vp)) < rd + rank(vp)) {
                bad_i = i;
                break;
            }
        }
        const Matrix vp = stack_columns(s, prefix);
        const std::size_t rp = rank(vp);
        int bad_m = sp.desired.front();
        for (int m : sp.desired) {
            const Matrix& vm = s.V.at(m);
            if (rank(hconcat(vm, vp)) < rank(vm) + rp) {
                bad_m = m;
                break;
            }
        }
        report.diagnostics.push_back(
            {DiagnosticKind::resolvability, bad_m, bad_i, d.id, "desired and interference spans intersect"});
    }
}

}  // namespace

VerificationReport verify(const Instance& inst, const LinearScheme& s, VerifyMode mode) {
    check_well_formed(inst, s);
    VerificationReport report;
    report.mode = mode == VerifyMode::automatic ? (s.has_decoders() ? VerifyMode::decoders : VerifyMode::rank) : mode;
    if (report.mode == VerifyMode::decoders)
        verify_decoders(inst, s, report);
    else
        verify_rank(inst, s, report);
    report.valid = report.diagnostics.empty();
    report.rates = s.rates(inst.num_messages);
    return report;
}

LinearScheme synthesize_decoders(const Instance& inst, const LinearScheme& s) {
    const VerificationReport report = verify(inst, s, VerifyMode::rank);
    if (!report.valid) {
        const Diagnostic& d = report.diagnostics.front();
        throw NoDecoderExists("destination " + std::to_string(d.k) + " cannot resolve message " +
                              std::to_string(d.m) + ": " + d.detail);
    }
    LinearScheme out = s;
    out.U.clear();
    for (const Destination& d : inst.destinations) {
        for (int m : d.wants) {
            std::vector<int> others;
            for (int i = 1; i <= inst.num_messages; ++i)
                if (i != m && !d.has.count(i)) others.push_back(i);
            const Matrix block = stack_columns(s, others);
            const Matrix annihilator = left_nullspace(block);
            const Matrix g = multiply(annihilator, s.V.at(m));

            std::vector<std::size_t> rows;
            std::size_t current = 0;
            for (std::size_t r = 0; r < g.rows() && current < s.L(m); ++r) {
                rows.push_back(r);
                const Matrix picked = g.transpose().select_columns(rows);
                if (rank(picked) > current)
                    ++current;
                else
                    rows.pop_back();
            }
            if (current < s.L(m))
                throw NoDecoderExists("no zero-forcing decoder for message " + std::to_string(m) +
                                      " at destination " + std::to_string(d.id));
            const Matrix u = annihilator.transpose().select_columns(rows).transpose();
            out.U.emplace(std::make_pair(m, d.id), multiply(*inverse(multiply(u, s.V.at(m))), u));
        }
    }
    return out;
}

std::uint64_t tuple_space_size(const Instance& inst, const LinearScheme& s) {
    std::uint64_t total = 1;
    const std::uint64_t q = s.field.order();
    for (int m = 1; m <= inst.num_messages; ++m)
        for (std::size_t c = 0; c < s.L(m); ++c) {
            if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
            total *= q;
        }
    return total;
}

namespace {

struct Coord {
    int message;
    std::size_t column;
};

std::vector<Coord> flatten(const Instance& inst, const LinearScheme& s) {
    std::vector<Coord> out;
    for (int m = 1; m <= inst.num_messages; ++m)
        for (std::size_t c = 0; c < s.L(m); ++c) out.push_back({m, c});
    return out;
}

/// Visits every tuple of `count` digits in 0..q-1 in reflected Gray order
/// starting from all zeros. `step(j, old, now)` runs after each single-digit
/// change and returns false to stop early. Returns false if stopped.
template <class Step>
bool gray_walk(std::size_t count, std::uint64_t q, Step&& step) {
    std::vector<std::uint64_t> digit(count, 0);
    std::vector<int> dir(count, 1);
    while (true) {
        std::size_t j = 0;
        while (j < count && ((dir[j] > 0 && digit[j] == q - 1) || (dir[j] < 0 && digit[j] == 0))) {
            dir[j] = -dir[j];
            ++j;
        }
        if (j == count) return true;
        const auto old = static_cast<Element>(digit[j]);
        digit[j] = dir[j] > 0 ? digit[j] + 1 : digit[j] - 1;
        if (!step(j, old, static_cast<Element>(digit[j]))) return false;
    }
}

std::vector<std::vector<Element>> unflatten(const Instance& inst, const LinearScheme& s,
                                            const std::vector<Element>& flat) {
    std::vector<std::vector<Element>> out(static_cast<std::size_t>(inst.num_messages));
    std::size_t pos = 0;
    for (int m = 1; m <= inst.num_messages; ++m)
        for (std::size_t c = 0; c < s.L(m); ++c) out[static_cast<std::size_t>(m - 1)].push_back(flat[pos++]);
    return out;
}

// Decoder outputs tracked incrementally: each desired pair (m, k) holds
// U_{m,k} (S - antidote part), updated by one column per Gray step.
class DecoderTracker {
public:
    DecoderTracker(const Instance& inst, const LinearScheme& s) : field_(s.field) {
        coords_ = flatten(inst, s);
        std::map<std::pair<int, std::size_t>, std::size_t> coord_index;
        for (std::size_t t = 0; t < coords_.size(); ++t) coord_index[{coords_[t].message, coords_[t].column}] = t;

        updates_.resize(coords_.size());
        watchers_.resize(coords_.size());
        for (const Destination& d : inst.destinations) {
            for (int m : d.wants) {
                // decode as inv(U V_m) U y when U V_m is invertible
                Matrix u = s.U.at({m, d.id});
                if (const auto g = inverse(multiply(u, s.V.at(m)))) u = multiply(*g, u);
                const std::size_t base = target_.size();
                for (std::size_t r = 0; r < s.L(m); ++r) {
                    const std::size_t t = coord_index.at({m, r});
                    target_.push_back(t);
                    owner_.push_back({m, d.id});
                    watchers_[t].push_back(base + r);
                }
                for (std::size_t t = 0; t < coords_.size(); ++t) {
                    const int i = coords_[t].message;
                    if (d.has.count(i)) continue;
                    const Matrix w = multiply(u, s.V.at(i).column(coords_[t].column));
                    for (std::size_t r = 0; r < w.rows(); ++r)
                        if (w(r, 0) != 0) updates_[t].push_back({base + r, w(r, 0)});
                }
            }
        }
    }

    std::size_t size() const noexcept { return coords_.size(); }
    const std::vector<Coord>& coords() const noexcept { return coords_; }

    void reset(std::size_t first, Element value) {
        x_.assign(coords_.size(), 0);
        decoded_.assign(target_.size(), 0);
        bad_.assign(target_.size(), 0);
        mismatches_ = 0;
        if (!coords_.empty() && value != 0) change(first, 0, value);
    }

    void change(std::size_t t, Element old, Element now) {
        const Element delta = field_.sub(now, old);
        x_[t] = now;
        for (const auto& [slot, w] : updates_[t]) {
            decoded_[slot] = field_.add(decoded_[slot], field_.mul(delta, w));
            refresh(slot);
        }
        for (std::size_t slot : watchers_[t]) refresh(slot);
    }

    bool ok() const noexcept { return mismatches_ == 0; }
    const std::vector<Element>& tuple() const noexcept { return x_; }

    std::pair<int, int> first_failure() const {
        for (std::size_t slot = 0; slot < bad_.size(); ++slot)
            if (bad_[slot]) return owner_[slot];
        return {0, 0};
    }

private:
    void refresh(std::size_t slot) {
        const char now = decoded_[slot] != x_[target_[slot]];
        mismatches_ += now - bad_[slot];
        bad_[slot] = now;
    }

    Field field_;
    std::vector<Coord> coords_;
    std::vector<std::vector<std::pair<std::size_t, Element>>> updates_;
    std::vector<std::vector<std::size_t>> watchers_;
    std::vector<std::size_t> target_;
    std::vector<std::pair<int, int>> owner_;
    std::vector<Element> x_;
    std::vector<Element> decoded_;
    std::vector<char> bad_;
    long mismatches_ = 0;
};

struct PartResult {
    std::uint64_t tuples = 0;
    std::optional<Counterexample> failure;
};

PartResult run_part(const Instance& inst, const LinearScheme& s, DecoderTracker tracker, Element first_value) {
    PartResult out;
    tracker.reset(0, first_value);
    auto fail = [&] {
        Counterexample ce;
        ce.tuple = unflatten(inst, s, tracker.tuple());
        std::tie(ce.message, ce.destination) = tracker.first_failure();
        out.failure = std::move(ce);
    };
    out.tuples = 1;
    if (!tracker.ok()) {
        fail();
        return out;
    }
    const std::size_t rest = tracker.size() - 1;
    gray_walk(rest, s.field.order(), [&](std::size_t j, Element old, Element now) {
        tracker.change(j + 1, old, now);
        ++out.tuples;
        if (tracker.ok()) return true;
        fail();
        return false;
    });
    return out;
}

// Without decoders: look for x != 0 on some desired message with zero
// antidotes and zero codeword, which collides with the all-zero tuple.
SimulationResult find_collision(const Instance& inst, const LinearScheme& s) {
    SimulationResult result;
    const Field& f = s.field;
    const std::vector<Coord> all = flatten(inst, s);
    for (const Destination& d : inst.destinations) {
        std::vector<std::size_t> active;
        for (std::size_t t = 0; t < all.size(); ++t)
            if (!d.has.count(all[t].message)) active.push_back(t);
        std::vector<Element> x(all.size(), 0);
        std::vector<Element> codeword(s.n, 0);
        std::size_t nonzero_codeword = 0;
        std::size_t nonzero_desired = 0;
        std::optional<Counterexample> found;
        gray_walk(active.size(), f.order(), [&](std::size_t j, Element old, Element now) {
            const std::size_t t = active[j];
            const Coord& c = all[t];
            const Element delta = f.sub(now, old);
            const Matrix& v = s.V.at(c.message);
            for (std::size_t r = 0; r < s.n; ++r) {
                const Element before = codeword[r];
                codeword[r] = f.add(before, f.mul(delta, v(r, c.column)));
                nonzero_codeword += (codeword[r] != 0) - (before != 0);
            }
            if (d.wants.count(c.message)) nonzero_desired += (now != 0) - (old != 0);
            x[t] = now;
            ++result.tuples;
            if (nonzero_codeword != 0 || nonzero_desired == 0) return true;
            Counterexample ce;
            ce.tuple = unflatten(inst, s, x);
            ce.other = unflatten(inst, s, std::vector<Element>(all.size(), 0));
            ce.destination = d.id;
            for (int m : d.wants) {
                const auto& xm = ce.tuple[static_cast<std::size_t>(m - 1)];
                if (std::any_of(xm.begin(), xm.end(), [](Element e) { return e != 0; })) {
                    ce.message = m;
                    break;
                }
            }
            found = std::move(ce);
            return false;
        });
        if (found) {
            result.ok = false;
            result.counterexample = std::move(found);
            return result;
        }
    }
    // Rank verification failed but no collision exists; this cannot happen
    // for linear schemes and is reported as a failure without a witness.
    result.ok = false;
    return result;
}

}  // namespace

SimulationResult simulate_exhaustive(const Instance& inst, const LinearScheme& s, const SimulationOptions& opts) {
    check_well_formed(inst, s);
    const std::uint64_t space = tuple_space_size(inst, s);
    if (space > opts.budget)
        throw BudgetExceeded("tuple space " + (space == std::numeric_limits<std::uint64_t>::max()
                                                   ? std::string("overflows 64 bits")
                                                   : std::to_string(space)) +
                             " exceeds budget " + std::to_string(opts.budget));

    LinearScheme with_u = s;
    if (!s.has_decoders()) {
        try {
            with_u = synthesize_decoders(inst, s);
        } catch (const NoDecoderExists&) {
            return find_collision(inst, s);
        }
    } else {
        for (const Destination& d : inst.destinations)
            for (int m : d.wants)
                if (!s.U.count({m, d.id}))
                    throw SchemeMalformed("no U for message " + std::to_string(m) + " at destination " +
                                          std::to_string(d.id));
    }

    const DecoderTracker tracker(inst, with_u);
    SimulationResult result;
    if (tracker.size() == 0) {
        DecoderTracker t = tracker;
        t.reset(0, 0);
        result.tuples = 1;
        result.ok = t.ok();
        return result;
    }

    const std::uint64_t parts = s.field.order();
    std::vector<PartResult> outcomes(parts);
    unsigned threads = opts.threads ? opts.threads : default_threads();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, parts));
    if (threads <= 1) {
        for (std::uint64_t v = 0; v < parts; ++v) {
            outcomes[v] = run_part(inst, with_u, tracker, static_cast<Element>(v));
            if (outcomes[v].failure) break;
        }
    } else {
        std::mutex mu;
        std::uint64_t next = 0;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::uint64_t v;
                    {
                        std::lock_guard lock(mu);
                        if (next == parts) return;
                        v = next++;
                    }
                    outcomes[v] = run_part(inst, with_u, tracker, static_cast<Element>(v));
                }
            });
        for (std::thread& t : pool) t.join();
    }

    result.ok = true;
    for (PartResult& part : outcomes) {
        result.tuples += part.tuples;
        if (part.failure) {
            result.ok = false;
            result.counterexample = std::move(part.failure);
            break;
        }
    }
    return result;
}

SimulationResult simulate_sampled(const Instance& inst, const LinearScheme& s, std::uint64_t samples,
                                  std::uint64_t seed) {
    check_well_formed(inst, s);
    SimulationResult result;
    LinearScheme with_u = s;
    if (!s.has_decoders()) {
        try {
            with_u = synthesize_decoders(inst, s);
        } catch (const NoDecoderExists&) {
            return result;
        }
    }
    const Field& f = s.field;

    struct Decoder {
        int m;
        int k;
        Matrix u;
        Matrix inv;  // (U V_m)^{-1}
    };
    std::vector<Decoder> decoders;
    for (const Destination& d : inst.destinations)
        for (int m : d.wants) {
            const auto it = with_u.U.find({m, d.id});
            if (it == with_u.U.end())
                throw SchemeMalformed("no U for message " + std::to_string(m) + " at destination " + std::to_string(d.id));
            auto inv = inverse(multiply(it->second, s.V.at(m)));
            if (!inv) {
                Counterexample ce;
                ce.destination = d.id;
                ce.message = m;
                result.counterexample = std::move(ce);
                return result;
            }
            decoders.push_back({m, d.id, it->second, std::move(*inv)});
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    std::vector<Matrix> x;
    for (std::uint64_t t = 0; t < samples; ++t) {
        x.clear();
        Matrix codeword(f, s.n, 1);
        for (int m = 1; m <= inst.num_messages; ++m) {
            Matrix xm(f, s.L(m), 1);
            for (std::size_t r = 0; r < xm.rows(); ++r) xm(r, 0) = static_cast<Element>(pick(rng));
            codeword = add(codeword, multiply(s.V.at(m), xm));
            x.push_back(std::move(xm));
        }
        ++result.tuples;
        for (const Decoder& dec : decoders) {
            Matrix residual = codeword;
            for (int i : inst.destination(dec.k).has)
                residual = add(residual, scale(multiply(s.V.at(i), x[static_cast<std::size_t>(i - 1)]), f.neg(1)));
            const Matrix estimate = multiply(dec.inv, multiply(dec.u, residual));
            if (estimate.to_rows() == x[static_cast<std::size_t>(dec.m - 1)].to_rows()) continue;
            Counterexample ce;
            ce.destination = dec.k;
            ce.message = dec.m;
            for (const Matrix& xm : x) {
                std::vector<Element> flat;
                for (std::size_t r = 0; r < xm.rows(); ++r) flat.push_back(xm(r, 0));
                ce.tuple.push_back(std::move(flat));
            }
            result.counterexample = std::move(ce);
            return result;
        }
    }
    result.ok = true;
    return result;
}

DimensionAudit dimension_audit(const Instance& inst, const LinearScheme& s) {
    if (!inst.family || inst.family->kind != FamilyKind::neighboring_antidotes)
        throw UnsupportedFamily("dimension audit needs a neighboring-antidotes instance");
    if (!verify(inst, s, VerifyMode::rank).valid) throw SchemeInvalid("dimension audit needs a valid scheme");
    const FamilyTag& tag = *inst.family;
    const int K = tag.K;
    const int U = tag.U;
    const int top = K - tag.A() - 1;

    DimensionAudit audit;
    const int J = std::min(K, std::max(top, U + 1));
    for (int j = 1; j <= J; ++j) {
        std::int64_t total = 0;
        for (int i = 1; i <= K; ++i) {
            std::vector<int> window;
            for (int t = 0; t < j; ++t) window.push_back(wrap(i + t, K));
            total += static_cast<std::int64_t>(rank(stack_columns(s, window)));
        }
        audit.alpha.push_back(total);
    }
    auto alpha = [&](int j) { return Rational(audit.alpha[static_cast<std::size_t>(j - 1)]); };
    auto add_check = [&](std::string name, Rational lhs, Rational rhs) {
        audit.checks.push_back({std::move(name), lhs, rhs, lhs - rhs, lhs >= rhs});
    };

    if (top >= 1) {
        add_check("alpha_" + std::to_string(top) + " >= (K-A-1+U)/(U+1) alpha_1", alpha(top),
                  Rational(top + U, U + 1) * alpha(1));
        int mm = top / (U + 1);
        int jj = top % (U + 1);
        if (jj == 0) {
            mm -= 1;
            jj = U + 1;
        }
        add_check("alpha_" + std::to_string(top) + " >= " + std::to_string(mm) + " alpha_1 + alpha_" +
                      std::to_string(jj),
                  alpha(top), Rational(mm) * alpha(1) + alpha(jj));
    }
    for (int j = 2; j <= std::min(U + 1, J); ++j)
        add_check("alpha_" + std::to_string(j) + " >= alpha_" + std::to_string(j - 1) + " + alpha_1/(U+1)", alpha(j),
                  alpha(j - 1) + alpha(1) / Rational(U + 1));
    audit.holds = std::all_of(audit.checks.begin(), audit.checks.end(), [](const AuditCheck& c) { return c.holds; });
    return audit;
}

}  // namespace icx
