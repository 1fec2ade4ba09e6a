#include "entwine/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace entwine {

std::string to_string(Answer a) {
    switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
    }
    return "unknown";
}

bool parallel_enabled(const SearchBudget& b) {
    if (!b.parallel) return false;
    const char* env = std::getenv("ENTWINE_NO_PARALLEL");
    return !(env && std::string(env) == "1");
}

namespace detail {

namespace {

// base^dim, saturating at limit + 1
std::uint64_t capped_power(std::uint64_t base, std::size_t dim, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

} // namespace

CandidatePlan plan_search(const Field& f, std::size_t dim, const SearchBudget& b) {
    CandidatePlan plan;
    plan.field = f;
    plan.dim = dim;
    plan.seed = b.seed;
    if (f.is_prime()) {
        std::uint64_t count = capped_power(f.characteristic(), dim, b.enum_budget);
        if (count <= b.enum_budget) {
            plan.base = f.characteristic();
            plan.enumerated = count;
            plan.exhaustive = true;
            return plan;
        }
    }
    plan.base = 3;
    plan.enumerated = std::min(capped_power(3, dim, b.enum_budget), std::max<std::uint64_t>(b.enum_budget, 1));
    plan.random = b.trials;
    // up to scaling, {0} and {1} already exhaust spaces of dimension <= 1
    plan.exhaustive = dim <= 1;
    return plan;
}

Vector candidate(const CandidatePlan& plan, std::uint64_t index) {
    const Field& f = plan.field;
    Vector v;
    v.reserve(plan.dim);
    if (index < plan.enumerated) {
        for (std::size_t k = 0; k < plan.dim; ++k) {
            std::uint64_t digit = index % plan.base;
            index /= plan.base;
            if (plan.base == 3 && !(f.is_prime() && f.characteristic() == 3))
                v.push_back(digit == 2 ? f.from_int(-1) : f.from_int(static_cast<std::int64_t>(digit)));
            else
                v.push_back(f.from_int(static_cast<std::int64_t>(digit)));
        }
        return v;
    }
    std::mt19937_64 rng(plan.seed ^ (0x9E3779B97F4A7C15ULL * (index - plan.enumerated + 1)));
    if (f.is_prime()) {
        std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
        for (std::size_t k = 0; k < plan.dim; ++k) v.push_back(Scalar::modular(dist(rng), f.characteristic()));
    } else {
        std::uniform_int_distribution<std::int64_t> dist(-5, 5);
        for (std::size_t k = 0; k < plan.dim; ++k) v.push_back(f.from_int(dist(rng)));
    }
    return v;
}

std::optional<std::uint64_t> first_success(std::uint64_t n, bool parallel,
                                           const std::function<bool(std::uint64_t)>& body) {
    unsigned threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (threads == 1 || n < 64) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (body(i)) return i;
        return std::nullopt;
    }

    const std::uint64_t chunk = std::max<std::uint64_t>(1, n / (threads * 16ULL));
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{n};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                std::uint64_t start = next_chunk.fetch_add(1) * chunk;
                if (start >= n || start >= best.load()) return;
                std::uint64_t stop = std::min(n, start + chunk);
                for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
                    if (body(i)) {
                        std::uint64_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    if (best.load() < n) return best.load();
    return std::nullopt;
}

} // namespace detail

BilinearResult solve_bilinear(const BilinearProblem& p, const SearchBudget& budget) {
    const Field& f = p.field;
    const std::size_t neq = p.target.size();
    if (p.terms.size() != p.s_dim) throw ContractViolation("solve_bilinear: term table has wrong s-dimension");

    std::vector<Matrix> slices;
    slices.reserve(p.s_dim);
    for (const auto& row : p.terms) {
        if (row.size() != p.t_dim) throw ContractViolation("solve_bilinear: term table has wrong t-dimension");
        slices.push_back(Matrix::from_columns(f, row, neq));
    }

    using Pair = std::pair<Vector, Vector>;
    auto outcome = search<Pair>(f, p.s_dim, budget, [&](const Vector& s) -> std::optional<Pair> {
        Matrix m(f, neq, p.t_dim);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) m = m + slices[i].scaled(s[i]);
        auto sol = solve_linear(m, p.target);
        if (!sol.particular) return std::nullopt;
        return Pair{s, *sol.particular};
    });

    BilinearResult r;
    r.examined = outcome.examined;
    if (outcome.witness) {
        r.s = outcome.witness->first;
        r.t = outcome.witness->second;
        Vector check = zero_vector(f, neq);
        for (std::size_t i = 0; i < p.s_dim; ++i)
            for (std::size_t j = 0; j < p.t_dim; ++j) {
                if (r.s[i].is_zero() || r.t[j].is_zero()) continue;
                auto c = r.s[i] * r.t[j];
                for (std::size_t e = 0; e < neq; ++e) check[e] += c * p.terms[i][j][e];
            }
        if (check != p.target) throw std::logic_error("solve_bilinear: witness failed substitution");
        r.answer = Answer::yes;
        r.reason = "witness found";
    } else if (outcome.exhaustive) {
        r.answer = Answer::no;
        r.reason = f.is_prime() && p.s_dim > 1 ? "exhaustive enumeration" : "linear infeasibility on every candidate direction";
    } else {
        r.answer = Answer::unknown;
        r.reason = "search budget exhausted after " + std::to_string(outcome.examined) + " candidates (seed " +
                   std::to_string(budget.seed) + ")";
    }
    return r;
}

} // namespace entwine
