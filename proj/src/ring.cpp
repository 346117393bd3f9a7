#include "ncsys/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ncsys {

namespace detail {

struct Basis {
    int n = 0;
    bool commutative = false;
    int max_z = 0;
    std::vector<Word> words;
    std::vector<int> degrees;
    std::vector<MonoIndex> offset;   // offset[d] = first index of degree d; offset[max_z + 1] = size
    std::vector<std::uint64_t> pow_n; // noncommutative rank arithmetic
    std::map<Word, MonoIndex> lookup; // commutative canonical words
    std::vector<MonoIndex> mul_table; // commutative, row-major size x size (may be empty)
};

namespace {

constexpr std::size_t kMaxBasisSize = 4'000'000;
constexpr std::size_t kMaxMulTable = 16'000'000;

void sorted_words(int n, int length, int min_letter, Word& prefix, std::vector<Word>& out)
{
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    for (int letter = min_letter; letter < n; ++letter) {
        prefix.push_back(letter);
        sorted_words(n, length, letter, prefix, out);
        prefix.pop_back();
    }
}

std::shared_ptr<const Basis> build_basis(int n, bool commutative, int max_z)
{
    auto b = std::make_shared<Basis>();
    b->n = n;
    b->commutative = commutative || n == 1;
    b->max_z = max_z;
    b->offset.assign(static_cast<std::size_t>(max_z) + 2, 0);

    if (!b->commutative) {
        b->pow_n.assign(static_cast<std::size_t>(max_z) + 1, 1);
        std::size_t total = 0;
        for (int d = 0; d <= max_z; ++d) {
            if (d > 0) {
                b->pow_n[d] = b->pow_n[d - 1] * static_cast<std::uint64_t>(n);
            }
            total += b->pow_n[d];
            if (total > kMaxBasisSize) {
                throw PreconditionError("monomial basis too large (n=" + std::to_string(n) +
                                        ", max_z=" + std::to_string(max_z) + ")");
            }
        }
        b->words.reserve(total);
        for (int d = 0; d <= max_z; ++d) {
            b->offset[d] = static_cast<MonoIndex>(b->words.size());
            for (std::uint64_t r = 0; r < b->pow_n[d]; ++r) {
                Word w(static_cast<std::size_t>(d));
                std::uint64_t rest = r;
                for (int p = d - 1; p >= 0; --p) {
                    w[p] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
                    rest /= static_cast<std::uint64_t>(n);
                }
                b->words.push_back(std::move(w));
                b->degrees.push_back(d);
            }
        }
    } else {
        for (int d = 0; d <= max_z; ++d) {
            b->offset[d] = static_cast<MonoIndex>(b->words.size());
            std::vector<Word> layer;
            Word prefix;
            sorted_words(n, d, 0, prefix, layer);
            for (auto& w : layer) {
                b->lookup.emplace(w, static_cast<MonoIndex>(b->words.size()));
                b->words.push_back(std::move(w));
                b->degrees.push_back(d);
            }
            if (b->words.size() > kMaxBasisSize) {
                throw PreconditionError("monomial basis too large (n=" + std::to_string(n) +
                                        ", max_z=" + std::to_string(max_z) + ")");
            }
        }
        const std::size_t size = b->words.size();
        if (size * size <= kMaxMulTable) {
            b->mul_table.assign(size * size, kNoMonomial);
            for (std::size_t i = 0; i < size; ++i) {
                for (std::size_t j = 0; j < size; ++j) {
                    if (b->degrees[i] + b->degrees[j] > max_z) {
                        continue;
                    }
                    Word merged;
                    std::merge(b->words[i].begin(), b->words[i].end(), b->words[j].begin(), b->words[j].end(),
                               std::back_inserter(merged));
                    b->mul_table[i * size + j] = b->lookup.at(merged);
                }
            }
        }
    }
    b->offset[static_cast<std::size_t>(max_z) + 1] = static_cast<MonoIndex>(b->words.size());
    return b;
}

} // namespace
} // namespace detail

Ring::Ring(int n, bool commutative, int max_z_degree, int max_t_degree)
    : n_(n), commutative_(commutative), max_z_(max_z_degree), max_t_(max_t_degree)
{
    if (n < 1) {
        throw PreconditionError("ring needs n >= 1");
    }
    if (max_z_degree < 1) {
        throw PreconditionError("ring needs max_z_degree >= 1");
    }
    if (max_t_degree < 0) {
        throw PreconditionError("ring needs max_t_degree >= 0");
    }
    basis_ = detail::build_basis(n, commutative, max_z_degree);
}

int Ring::n() const { return n_; }
bool Ring::commutative() const { return commutative_; }
int Ring::max_z_degree() const { return max_z_; }
int Ring::max_t_degree() const { return max_t_; }

std::size_t Ring::basis_size() const { return basis_->words.size(); }
const Word& Ring::word(MonoIndex m) const { return basis_->words[m]; }
int Ring::degree(MonoIndex m) const { return basis_->degrees[m]; }

MonoIndex Ring::variable(int i) const
{
    if (i < 0 || i >= n_) {
        throw PreconditionError("variable index out of range");
    }
    return static_cast<MonoIndex>(1 + i);
}

MonoIndex Ring::index_of(std::span<const int> word) const
{
    const auto& b = *basis_;
    const int d = static_cast<int>(word.size());
    if (d > max_z_) {
        return kNoMonomial;
    }
    for (int letter : word) {
        if (letter < 0 || letter >= n_) {
            throw PreconditionError("variable index " + std::to_string(letter) + " out of range for n=" +
                                    std::to_string(n_));
        }
    }
    if (!b.commutative) {
        std::uint64_t rank = 0;
        for (int letter : word) {
            rank = rank * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(letter);
        }
        return b.offset[d] + static_cast<MonoIndex>(rank);
    }
    Word sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    return b.lookup.at(sorted);
}

MonoIndex Ring::mul(MonoIndex a, MonoIndex c) const
{
    const auto& b = *basis_;
    const int da = b.degrees[a];
    const int dc = b.degrees[c];
    if (da + dc > max_z_) {
        return kNoMonomial;
    }
    if (!b.commutative) {
        const std::uint64_t ra = a - b.offset[da];
        const std::uint64_t rc = c - b.offset[dc];
        return b.offset[da + dc] + static_cast<MonoIndex>(ra * b.pow_n[dc] + rc);
    }
    if (!b.mul_table.empty()) {
        return b.mul_table[static_cast<std::size_t>(a) * b.words.size() + c];
    }
    Word merged;
    std::merge(b.words[a].begin(), b.words[a].end(), b.words[c].begin(), b.words[c].end(),
               std::back_inserter(merged));
    return b.lookup.at(merged);
}

std::vector<int> Ring::exponents(MonoIndex m) const
{
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    for (int letter : word(m)) {
        ++e[letter];
    }
    return e;
}

std::pair<MonoIndex, MonoIndex> Ring::degree_range(int d) const
{
    if (d < 0 || d > max_z_) {
        return {0, 0};
    }
    return {basis_->offset[d], basis_->offset[d + 1]};
}

std::string Ring::describe() const
{
    std::ostringstream os;
    os << "(n=" << n_ << ", " << (commutative_ ? "commutative" : "noncommutative") << ", N_z=" << max_z_
       << ", N_t=" << max_t_ << ")";
    return os.str();
}

bool operator==(const Ring& a, const Ring& b)
{
    return a.n_ == b.n_ && a.commutative_ == b.commutative_ && a.max_z_ == b.max_z_ && a.max_t_ == b.max_t_;
}

void require_same_ring(const Ring& a, const Ring& b, const char* what)
{
    if (!(a == b)) {
        throw ContextMismatch(std::string(what) + ": ring mismatch " + a.describe() + " vs " + b.describe());
    }
}

} // namespace ncsys
