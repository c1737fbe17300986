#include "cotop/primefam.hpp"

#include "cotop/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cotop::primefam {

namespace {

std::vector<u64> mersenne_members() {
    std::vector<u64> out;
    for (u64 p = 2; p <= 61; ++p) {
        if (!arith::is_prime(p)) continue;
        const u64 candidate = (u64{1} << p) - 1;
        if (arith::is_prime(candidate)) out.push_back(candidate);
    }
    return out;
}

std::vector<u64> fermat_members() {
    std::vector<u64> out;
    for (unsigned k = 0; k <= 4; ++k) {
        const u64 candidate = (u64{1} << (u64{1} << k)) + 1;
        if (!arith::is_prime(candidate)) {
            fail(ErrorKind::Precondition, "Fermat number F" + std::to_string(k) + " failed primality");
        }
        out.push_back(candidate);
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Parses "name(a,b)".
bool parse_pair(const std::string& text, const std::string& head, u64& a, u64& b) {
    if (text.rfind(head + "(", 0) != 0 || text.back() != ')') return false;
    const std::string inner = text.substr(head.size() + 1, text.size() - head.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        const std::string lhs = trim(inner.substr(0, comma));
        const std::string rhs = trim(inner.substr(comma + 1));
        a = std::stoull(lhs, &used);
        if (used != lhs.size()) return false;
        b = std::stoull(rhs, &used);
        return used == rhs.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Family Family::all_primes() { return Family{}; }

Family Family::progression(u64 a, u64 b) {
    arith::require_pos(a, "progression start");
    arith::require_pos(b, "progression step");
    if (std::gcd(a, b) != 1) {
        fail(ErrorKind::Precondition, "prime progression needs gcd(a,b)=1, got gcd(" +
                                          std::to_string(a) + "," + std::to_string(b) + ")=" +
                                          std::to_string(std::gcd(a, b)));
    }
    Family f;
    f.kind_ = Kind::Progression;
    f.a_ = a;
    f.b_ = b;
    return f;
}

Family Family::mersenne() {
    Family f;
    f.kind_ = Kind::Mersenne;
    f.list_ = mersenne_members();
    return f;
}

Family Family::fermat() {
    Family f;
    f.kind_ = Kind::Fermat;
    f.list_ = fermat_members();
    return f;
}

Family Family::twin() {
    Family f;
    f.kind_ = Kind::Twin;
    return f;
}

Family Family::custom(std::vector<u64> primes) {
    if (primes.empty()) fail(ErrorKind::Precondition, "custom family is empty");
    for (u64 p : primes) {
        if (p == 0 || !arith::is_prime(p)) {
            fail(ErrorKind::Precondition, "custom family entry " + std::to_string(p) + " is not prime");
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    Family f;
    f.kind_ = Kind::Custom;
    f.list_ = std::move(primes);
    return f;
}

Family Family::parse_custom(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<u64> values;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto where = "line " + std::to_string(lineno) + ": ";
        if (!std::all_of(line.begin(), line.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            fail(ErrorKind::Io, where + "expected a decimal integer, got '" + line + "'");
        }
        u64 v = 0;
        try {
            v = std::stoull(line);
        } catch (const std::exception&) {
            fail(ErrorKind::Io, where + "value out of 64-bit range");
        }
        if (v == 0 || v > arith::kMaxPosInt || !arith::is_prime(v)) {
            fail(ErrorKind::Io, where + line + " is not prime");
        }
        values.push_back(v);
    }
    if (values.empty()) fail(ErrorKind::Io, "custom family file lists no primes");
    return custom(std::move(values));
}

Family Family::load_custom(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot read family file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_custom(buf.str());
}

Family Family::from_name(const std::string& raw) {
    std::string name;
    for (char c : raw) {
        if (c != ' ') name += c;
    }
    if (name == "primes" || name == "all_primes") return all_primes();
    if (name == "mersenne") return mersenne();
    if (name == "fermat") return fermat();
    if (name == "twin") return twin();
    u64 a = 0;
    u64 b = 0;
    if (parse_pair(name, "progression", a, b) || parse_pair(name, "ap", a, b)) {
        return progression(a, b);
    }
    fail(ErrorKind::Precondition, "unknown family '" + raw +
                                      "' (expected primes, mersenne, fermat, twin, progression(a,b), custom)");
}

std::string Family::name() const {
    switch (kind_) {
        case Kind::AllPrimes: return "primes";
        case Kind::Progression:
            return "progression(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
        case Kind::Mersenne: return "mersenne";
        case Kind::Fermat: return "fermat";
        case Kind::Twin: return "twin";
        case Kind::Custom: return "custom";
    }
    return "unknown";
}

bool Family::contains(u64 x) const {
    if (x < 2 || !arith::is_prime(x)) return false;
    switch (kind_) {
        case Kind::AllPrimes: return true;
        case Kind::Progression: return x >= a_ && (x - a_) % b_ == 0;
        case Kind::Mersenne: {
            const u64 y = x + 1;
            return (y & (y - 1)) == 0 && arith::is_prime(static_cast<u64>(__builtin_ctzll(y)));
        }
        case Kind::Fermat: {
            const u64 y = x - 1;
            if ((y & (y - 1)) != 0) return false;
            const u64 e = static_cast<u64>(__builtin_ctzll(y));
            return (e & (e - 1)) == 0;
        }
        case Kind::Twin: return x + 2 <= arith::kMaxPosInt && arith::is_prime(x + 2);
        case Kind::Custom: return std::binary_search(list_.begin(), list_.end(), x);
    }
    return false;
}

Cursor::Cursor(const Family& f) : family_(&f) {}

std::optional<u64> Cursor::compute_next() {
    const Family& f = *family_;
    using Kind = Family::Kind;
    switch (f.kind_) {
        case Kind::AllPrimes:
            last_ = arith::next_prime_after(last_);
            return last_;
        case Kind::Twin:
            for (u64 p = arith::next_prime_after(last_);; p = arith::next_prime_after(p)) {
                if (arith::is_prime(p + 2)) {
                    last_ = p;
                    return p;
                }
            }
        case Kind::Progression:
            for (u64 x = last_ == 0 ? f.a_ : last_ + f.b_;; x += f.b_) {
                if (x > arith::kMaxPosInt - f.b_) {
                    exhausted_ = true;
                    return std::nullopt;
                }
                if (arith::is_prime(x)) {
                    last_ = x;
                    return x;
                }
            }
        case Kind::Mersenne:
        case Kind::Fermat:
        case Kind::Custom:
            if (index_ >= f.list_.size()) {
                exhausted_ = true;
                return std::nullopt;
            }
            last_ = f.list_[index_++];
            return last_;
    }
    return std::nullopt;
}

std::optional<u64> Cursor::next(u64 limit) {
    if (!pending_) pending_ = compute_next();
    if (!pending_ || *pending_ > limit) return std::nullopt;
    const u64 out = *pending_;
    pending_.reset();
    return out;
}

Enumeration family_enumerate(const Family& f, std::size_t count) {
    if (count == 0) fail(ErrorKind::Precondition, "count must be at least 1");
    Enumeration e;
    Cursor c(f);
    while (e.members.size() < count) {
        const auto v = c.next();
        if (!v) {
            e.exhausted = true;
            break;
        }
        e.members.push_back(*v);
    }
    return e;
}

bool WitnessTable::all_resolved() const {
    return std::all_of(rows.begin(), rows.end(), [](const WitnessRow& r) { return r.witness.has_value(); });
}

WitnessTable density_probe(const Family& f, u64 n_max, u64 search_bound) {
    if (n_max < 2) fail(ErrorKind::Precondition, "probe needs n_max >= 2");
    arith::require_pos(search_bound, "search bound");
    WitnessTable table;
    table.family = f.name();

    // Members <= search_bound, materialized on demand and shared by rows.
    std::vector<u64> members;
    Cursor cursor(f);
    bool drained = false;
    auto member_at = [&](std::size_t i) -> std::optional<u64> {
        while (members.size() <= i && !drained) {
            if (const auto v = cursor.next(search_bound)) {
                members.push_back(*v);
            } else {
                drained = true;
            }
        }
        if (i < members.size()) return members[i];
        return std::nullopt;
    };

    for (u64 n = 2; n <= n_max; ++n) {
        WitnessRow row{n, std::nullopt, search_bound};
        for (std::size_t i = 0;; ++i) {
            const auto w = member_at(i);
            if (!w) break;
            if (std::gcd(n, *w) == 1) {
                row.witness = *w;
                break;
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

u64 next_new_prime(const std::vector<u64>& known) {
    u64 product = 1;
    for (u64 p : known) {
        if (p == 0 || !arith::is_prime(p)) {
            fail(ErrorKind::Precondition, std::to_string(p) + " is not prime");
        }
        if (product % p != 0) product = arith::checked_mul(product, p);
    }
    for (u64 q = 2;; q = arith::next_prime_after(q)) {
        if (product % q != 0) return q;
    }
}

bool partition_check(u64 big_n) {
    if (big_n < 2) fail(ErrorKind::Precondition, "partition window needs N >= 2");
    for (u64 x = 2; x <= big_n; ++x) {
        const u64 p = arith::smallest_prime_factor(x);
        if (x % p != 0 || !arith::is_prime(p)) return false;
    }
    return true;
}

bool ChainReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ChainEntry& e) { return e.passed; });
}

}  // namespace cotop::primefam
