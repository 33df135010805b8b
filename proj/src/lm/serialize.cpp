// Model file layout, all integers little-endian:
//   "NKNLM1" | u32 version | u32 order | u64 min_count
//   u32 vocab size, then per token: u32 length + bytes (id order)
//   per order k = 1..n: 3 x f64 discounts | u64 entries,
//     then entries sorted by (context ids, token id): k x u32 ids | u32 count

#include "model_impl.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace natrob::lm {

namespace {

constexpr char kMagic[6] = {'N', 'K', 'N', 'L', 'M', '1'};
constexpr std::uint32_t kVersion = 1;

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }
    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }
    void bytes(const char* p, std::size_t n) { out_.write(p, static_cast<std::streamsize>(n)); }

private:
    void le(std::uint64_t v, int n) {
        char buf[8];
        for (int i = 0; i < n; ++i)
            buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out_.write(buf, n);
    }
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }
    double f64() {
        const std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string bytes(std::size_t n) {
        std::string s(n, '\0');
        in_.read(s.data(), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw FormatError("model file is truncated");
        return s;
    }

private:
    std::uint64_t le(int n) {
        unsigned char buf[8];
        in_.read(reinterpret_cast<char*>(buf), n);
        if (in_.gcount() != n)
            throw FormatError("model file is truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
        return v;
    }
    std::istream& in_;
};

}  // namespace

void NgramModel::write(std::ostream& out) const {
    const Impl& m = *impl_;
    Writer w(out);
    w.bytes(kMagic, sizeof kMagic);
    w.u32(kVersion);
    w.u32(static_cast<std::uint32_t>(m.order));
    w.u64(m.min_count);
    w.u32(static_cast<std::uint32_t>(m.vocab.size()));
    for (const auto& t : m.vocab.tokens()) {
        w.u32(static_cast<std::uint32_t>(t.size()));
        w.bytes(t.data(), t.size());
    }
    for (const auto& level : m.levels) {
        for (double d : level.discounts)
            w.f64(d);
        std::vector<std::pair<Key, std::uint32_t>> entries;
        for (const auto& [ctx, stats] : level.contexts)
            for (const auto& [tok, c] : stats.counts) {
                Key full = ctx;
                full.push_back(tok);
                entries.emplace_back(std::move(full), c);
            }
        std::sort(entries.begin(), entries.end());
        w.u64(entries.size());
        for (const auto& [full, c] : entries) {
            for (TokenId id : full)
                w.u32(id);
            w.u32(c);
        }
    }
    if (!out)
        throw std::runtime_error("failed writing model");
}

NgramModel NgramModel::read(std::istream& in) {
    Reader r(in);
    const std::string magic = r.bytes(sizeof kMagic);
    if (magic != std::string(kMagic, sizeof kMagic))
        throw FormatError("not a model file (bad magic)");
    const std::uint32_t version = r.u32();
    if (version != kVersion)
        throw FormatError("unsupported model version " + std::to_string(version));

    auto impl = std::make_unique<Impl>();
    const std::uint32_t order = r.u32();
    if (order < 1 || order > 16)
        throw FormatError("implausible model order " + std::to_string(order));
    impl->order = static_cast<int>(order);
    impl->min_count = r.u64();

    const std::uint32_t vsize = r.u32();
    std::vector<std::string> tokens;
    tokens.reserve(vsize);
    for (std::uint32_t i = 0; i < vsize; ++i) {
        const std::uint32_t len = r.u32();
        if (len > (1u << 24))
            throw FormatError("implausible token length");
        tokens.push_back(r.bytes(len));
    }
    try {
        impl->vocab = Vocabulary::from_tokens(std::move(tokens));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad vocabulary: ") + e.what());
    }

    impl->levels.resize(order);
    for (std::uint32_t k = 1; k <= order; ++k) {
        Level& level = impl->levels[k - 1];
        for (double& d : level.discounts)
            d = r.f64();
        const std::uint64_t count = r.u64();
        Key ctx(k - 1);
        for (std::uint64_t e = 0; e < count; ++e) {
            for (auto& id : ctx)
                id = r.u32();
            const TokenId tok = r.u32();
            const std::uint32_t c = r.u32();
            if (tok >= vsize || c == 0 ||
                std::any_of(ctx.begin(), ctx.end(), [&](TokenId id) { return id >= vsize; }))
                throw FormatError("model entry out of range");
            level.contexts[ctx].counts[tok] = c;
        }
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw FormatError("trailing data after model");
    impl->finalize_stats();
    return NgramModel(std::move(impl));
}

void NgramModel::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write model to " + path);
    write(out);
}

NgramModel NgramModel::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open model " + path);
    return read(in);
}

}  // namespace natrob::lm
