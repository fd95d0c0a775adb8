#include "monopath/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace monopath {

bool BlockStructure::Block::contains(Vertex v) const {
    if (v < 0) return false;
    if (finite) return std::binary_search(members.begin(), members.end(), v);
    return v >= lo && v % mod == rem;
}

int BlockStructure::blockOf(Vertex v) const {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (blocks[i].contains(v)) return i;
    return -1;
}

std::optional<Color> BlockStructure::patternColor(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end());
    auto it = pattern.find(ids);
    if (it == pattern.end()) return std::nullopt;
    return it->second;
}

int BlockStructure::seatBlock() const {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (!blocks[i].finite) return i;
    return -1;
}

int BlockStructure::seatAmong(const std::vector<int>& blockIds) const {
    for (int id : blockIds)
        if (id >= 0 && id < static_cast<int>(blocks.size()) && !blocks[id].finite) return id;
    return -1;
}

namespace detail {

struct ColoringImpl {
    int r = 1;
    int k = 2;
    std::string tag;
    std::optional<long long> universe;
    std::shared_ptr<const BlockStructure> structure;

    virtual ~ColoringImpl() = default;
    virtual Color color(std::span<const Vertex> sortedEdge) const = 0;
};

namespace {

struct PatternColoring final : ColoringImpl {
    Color color(std::span<const Vertex> e) const override {
        std::vector<int> ids;
        ids.reserve(e.size());
        for (Vertex v : e) {
            int b = structure->blockOf(v);
            if (b < 0) throw DomainError("vertex outside block structure: " + std::to_string(v));
            ids.push_back(b);
        }
        auto c = structure->patternColor(std::move(ids));
        if (!c) throw DomainError("no edge for this block pattern");
        return *c;
    }
};

struct HashColoring final : ColoringImpl {
    std::uint64_t seed = 0;
    Color color(std::span<const Vertex> e) const override {
        std::uint64_t h = mix64(seed ^ 0x6d6f6e6f70617468ULL);
        for (Vertex v : e) h = mix64(h ^ mix64(static_cast<std::uint64_t>(v) + 0x9e37ULL));
        return static_cast<Color>(h % static_cast<std::uint64_t>(r));
    }
};

struct TableColoring final : ColoringImpl {
    std::map<std::vector<Vertex>, Color> table;
    Color color(std::span<const Vertex> e) const override {
        std::vector<Vertex> key(e.begin(), e.end());
        auto it = table.find(key);
        if (it == table.end()) throw DomainError("edge outside declared universe");
        return it->second;
    }
};

struct PairVectorColoring final : ColoringImpl {
    long long n = 0;
    std::vector<Color> pairColors;  // rank(i,j) = i*n - i*(i+1)/2 + (j-i-1)
    Color color(std::span<const Vertex> e) const override {
        Vertex i = e[0], j = e[1];
        if (j >= n) throw DomainError("vertex outside declared universe");
        std::size_t rank = static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
        return pairColors[rank];
    }
};

std::shared_ptr<BlockStructure> permuteStructure(const BlockStructure& s, const std::vector<Color>& perm) {
    auto out = std::make_shared<BlockStructure>();
    out->blocks = s.blocks;
    for (const auto& [ids, c] : s.pattern) out->pattern[ids] = perm[c];
    return out;
}

}  // namespace
}  // namespace detail

Coloring::Coloring(std::shared_ptr<const detail::ColoringImpl> impl) : impl_(std::move(impl)) {}

int Coloring::colors() const { return impl_->r; }
int Coloring::uniformity() const { return impl_->k; }
const std::string& Coloring::tag() const { return impl_->tag; }
std::optional<long long> Coloring::universe() const { return impl_->universe; }
std::shared_ptr<const BlockStructure> Coloring::blocks() const { return impl_->structure; }

Color Coloring::colorOf(std::span<const Vertex> edge) const {
    if (static_cast<int>(edge.size()) != impl_->k)
        throw ArityError("edge has " + std::to_string(edge.size()) + " vertices, coloring is " +
                         std::to_string(impl_->k) + "-uniform");
    std::vector<Vertex> e(edge.begin(), edge.end());
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] == e[i + 1]) throw ArityError("repeated vertex in edge");
    if (!e.empty() && e.front() < 0) throw DomainError("negative vertex");
    if (impl_->universe && !e.empty() && e.back() >= *impl_->universe)
        throw DomainError("vertex outside declared universe");
    return impl_->color(e);
}

Color Coloring::colorOf(std::initializer_list<Vertex> edge) const {
    return colorOf(std::span<const Vertex>(edge.begin(), edge.size()));
}

Color Coloring::colorOfPair(Vertex a, Vertex b) const { return colorOf({a, b}); }

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Coloring makeConstant(Color value, int r, int k) {
    if (r < 1 || value < 0 || value >= r || k < 2) throw ParseError("bad constant family parameters");
    auto st = std::make_shared<BlockStructure>();
    st->blocks.push_back({false, {}, 0, 1, 0});
    st->pattern[std::vector<int>(static_cast<std::size_t>(k), 0)] = value;
    auto impl = std::make_shared<detail::PatternColoring>();
    impl->r = r;
    impl->k = k;
    impl->tag = "constant:" + std::to_string(value);
    impl->structure = st;
    return Coloring(impl);
}

Coloring makeSeededRandom(int r, int k, std::uint64_t seed) {
    if (r < 1 || k < 2) throw ParseError("bad seeded-random parameters");
    auto impl = std::make_shared<detail::HashColoring>();
    impl->r = r;
    impl->k = k;
    impl->seed = seed;
    impl->tag = "seeded-random:" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(seed);
    return Coloring(impl);
}

Coloring makeBlockBipartite() {
    auto st = std::make_shared<BlockStructure>();
    st->blocks.push_back({false, {}, 0, 2, 0});  // evens
    st->blocks.push_back({false, {}, 0, 2, 1});  // odds
    st->pattern[{0, 0}] = 0;
    st->pattern[{1, 1}] = 0;
    st->pattern[{0, 1}] = 1;
    auto impl = std::make_shared<detail::PatternColoring>();
    impl->r = 2;
    impl->k = 2;
    impl->tag = "block-bipartite";
    impl->structure = st;
    return Coloring(impl);
}

Coloring makeCounterexample() {
    // blocks: 0:B={0..3} 1:C={4..7} 2:D={8} 3:A={9,10,...}
    auto st = std::make_shared<BlockStructure>();
    st->blocks.push_back({true, {0, 1, 2, 3}, 0, 1, 0});
    st->blocks.push_back({true, {4, 5, 6, 7}, 0, 1, 0});
    st->blocks.push_back({true, {8}, 0, 1, 0});
    st->blocks.push_back({false, {}, 9, 1, 0});
    st->pattern[{0, 0}] = 1;  // inside B
    st->pattern[{1, 1}] = 1;  // inside C
    st->pattern[{0, 1}] = 0;
    st->pattern[{0, 2}] = 0;
    st->pattern[{1, 2}] = 0;
    st->pattern[{0, 3}] = 1;  // A to B/C/D
    st->pattern[{1, 3}] = 1;
    st->pattern[{2, 3}] = 1;
    st->pattern[{3, 3}] = 0;  // inside A
    auto impl = std::make_shared<detail::PatternColoring>();
    impl->r = 2;
    impl->k = 2;
    impl->tag = "counterexample";
    impl->structure = st;
    return Coloring(impl);
}

Coloring makeMinThreshold(int k, Vertex threshold) {
    if (k < 2 || threshold < 1) throw ParseError("bad min-threshold parameters");
    auto st = std::make_shared<BlockStructure>();
    std::vector<Vertex> low(static_cast<std::size_t>(threshold));
    for (Vertex v = 0; v < threshold; ++v) low[static_cast<std::size_t>(v)] = v;
    st->blocks.push_back({true, std::move(low), 0, 1, 0});
    st->blocks.push_back({false, {}, threshold, 1, 0});
    // every multiset of k block ids; color 1 iff block 0 occurs
    std::vector<int> ids(static_cast<std::size_t>(k), 0);
    for (int zeros = 0; zeros <= k; ++zeros) {
        std::vector<int> key;
        for (int i = 0; i < zeros; ++i) key.push_back(0);
        for (int i = zeros; i < k; ++i) key.push_back(1);
        if (zeros > 0 && zeros > threshold) continue;  // not enough low vertices
        st->pattern[key] = zeros > 0 ? 1 : 0;
    }
    auto impl = std::make_shared<detail::PatternColoring>();
    impl->r = 2;
    impl->k = k;
    impl->tag = "min-threshold:" + std::to_string(k) + "," + std::to_string(threshold);
    impl->structure = st;
    return Coloring(impl);
}

Coloring makeFinitePairColoring(long long n, int r, std::vector<Color> pairColors) {
    std::size_t need = static_cast<std::size_t>(n * (n - 1) / 2);
    if (pairColors.size() != need) throw ParseError("pair color table has wrong size");
    for (Color c : pairColors)
        if (c < 0 || c >= r) throw ParseError("pair color out of range");
    auto impl = std::make_shared<detail::PairVectorColoring>();
    impl->r = r;
    impl->k = 2;
    impl->n = n;
    impl->universe = n;
    impl->pairColors = std::move(pairColors);
    impl->tag = "pairs:" + std::to_string(n);
    return Coloring(impl);
}

Coloring readColoringText(std::istream& in) {
    long long r = 0, k = 0, n = 0;
    if (!(in >> r >> k >> n)) throw ParseError("coloring file: bad header, expected 'r k n'");
    if (r < 1 || k < 2 || n < 0 || k > n + 1) throw ParseError("coloring file: implausible header");
    auto impl = std::make_shared<detail::TableColoring>();
    impl->r = static_cast<int>(r);
    impl->k = static_cast<int>(k);
    impl->universe = n;
    impl->tag = "file";
    // walk k-subsets of [0,n) in lexicographic order; each line must match
    std::vector<Vertex> sub(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = i;
    bool more = n >= k;
    while (more) {
        std::vector<Vertex> got(static_cast<std::size_t>(k));
        for (auto& v : got)
            if (!(in >> v)) throw ParseError("coloring file: truncated (missing subset line)");
        long long c;
        if (!(in >> c)) throw ParseError("coloring file: missing color");
        if (got != sub) {
            std::ostringstream os;
            os << "coloring file: subsets out of order or missing; expected";
            for (Vertex v : sub) os << ' ' << v;
            throw ParseError(os.str());
        }
        if (c < 0 || c >= r) throw ParseError("coloring file: color out of range");
        impl->table[sub] = static_cast<Color>(c);
        // next subset in lex order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++sub[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return Coloring(impl);
}

Coloring makeFromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coloring file: " + path);
    return readColoringText(in);
}

void writeColoringText(const Coloring& c, long long n, std::ostream& out) {
    int k = c.uniformity();
    out << c.colors() << ' ' << k << ' ' << n << '\n';
    if (n < k) return;
    std::vector<Vertex> sub(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (Vertex v : sub) out << v << ' ';
        out << c.colorOf(std::span<const Vertex>(sub)) << '\n';
        int i = k - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Coloring permuteColors(const Coloring& base, std::vector<Color> perm) {
    if (static_cast<int>(perm.size()) != base.colors()) throw ParseError("permutation size mismatch");
    struct Wrap final : detail::ColoringImpl {
        Coloring base{nullptr};
        std::vector<Color> perm;
        Color color(std::span<const Vertex> e) const override {
            return perm[base.colorOf(e)];
        }
    };
    auto w = std::make_shared<Wrap>();
    w->r = base.colors();
    w->k = base.uniformity();
    w->universe = base.universe();
    w->tag = base.tag() + "+perm";
    w->base = base;
    w->perm = perm;
    if (auto st = base.blocks()) w->structure = detail::permuteStructure(*st, perm);
    return Coloring(w);
}

Coloring parseColoringSpec(const std::string& spec, std::optional<int> rOverride,
                           std::optional<int> kOverride) {
    std::string name = spec;
    std::string args;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto splitInts = [&]() {
        std::vector<long long> out;
        std::stringstream ss(args);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(std::stoll(item));
        return out;
    };
    if (name == "constant") {
        auto a = splitInts();
        Color value = a.empty() ? 0 : static_cast<Color>(a[0]);
        int r = rOverride.value_or(value + 1);
        int k = kOverride.value_or(a.size() > 1 ? static_cast<int>(a[1]) : 2);
        return makeConstant(value, r, k);
    }
    if (name == "seeded-random") {
        auto a = splitInts();
        if (a.size() < 3) throw ParseError("seeded-random needs r,k,seed");
        int r = rOverride.value_or(static_cast<int>(a[0]));
        int k = kOverride.value_or(static_cast<int>(a[1]));
        return makeSeededRandom(r, k, static_cast<std::uint64_t>(a[2]));
    }
    if (name == "block-bipartite") return makeBlockBipartite();
    if (name == "counterexample") return makeCounterexample();
    if (name == "min-threshold") {
        auto a = splitInts();
        int k = kOverride.value_or(a.empty() ? 3 : static_cast<int>(a[0]));
        Vertex t = a.size() > 1 ? a[1] : 4;
        return makeMinThreshold(k, t);
    }
    if (name == "file") {
        if (args.empty()) throw ParseError("file family needs a path");
        return makeFromFile(args);
    }
    throw ParseError("unknown coloring family: " + name);
}

}  // namespace monopath
