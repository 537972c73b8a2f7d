#include "sspec/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace sspec {

namespace {

class Writer {
public:
    void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) { little_endian(v); }
    void u64(std::uint64_t v) { little_endian(v); }
    void str(std::string_view s) {
        u32(static_cast<std::uint32_t>(s.size()));
        bytes_.append(s);
    }
    void raw(const void* data, std::size_t n) { bytes_.append(static_cast<const char*>(data), n); }
    void id(const GroupId& g) {
        u8(static_cast<std::uint8_t>(g.family));
        u32(g.n);
        u64(g.p);
        u32(g.k);
    }
    const std::string& bytes() const { return bytes_; }

private:
    template <class T>
    void little_endian(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    std::string bytes_;
};

class Reader {
public:
    explicit Reader(std::string data) : data_(std::move(data)) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
    std::uint32_t u32() { return little_endian<std::uint32_t>(); }
    std::uint64_t u64() { return little_endian<std::uint64_t>(); }
    std::string str() {
        const std::uint32_t n = u32();
        return std::string(take(n), n);
    }
    void raw(void* out, std::size_t n) { std::memcpy(out, take(n), n); }
    GroupId id() {
        GroupId g;
        const std::uint8_t fam = u8();
        if (fam > static_cast<std::uint8_t>(Family::TwF4)) throw std::runtime_error("bad family tag");
        g.family = static_cast<Family>(fam);
        g.n = u32();
        g.p = u64();
        g.k = u32();
        return g;
    }
    bool done() const { return pos_ == data_.size(); }

private:
    const char* take(std::size_t n) {
        if (data_.size() - pos_ < n) throw std::runtime_error("truncated cache file");
        const char* p = data_.data() + pos_;
        pos_ += n;
        return p;
    }
    template <class T>
    T little_endian() {
        const char* p = take(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= T{static_cast<unsigned char>(p[i])} << (8 * i);
        return v;
    }
    std::string data_;
    std::size_t pos_ = 0;
};

void write_record(Writer& w, const GroupRecord& rec) {
    w.id(rec.id);
    w.str(rec.canonical_name);
    w.u32(static_cast<std::uint32_t>(rec.aliases.size()));
    for (const GroupId& a : rec.aliases) w.id(a);
    w.u32(static_cast<std::uint32_t>(rec.spectrum.size()));
    for (Prime p : rec.spectrum) w.u64(p);
    w.u64(rec.max_prime);
    w.u64(rec.spectrum_size);
    w.u32(static_cast<std::uint32_t>(rec.order_factors.factors.size()));
    for (const auto& [prime, exp] : rec.order_factors.factors) {
        w.u64(prime);
        w.u64(exp);
    }
    w.str(rec.order_factors.leftover.get_str(16));
}

GroupRecord read_record(Reader& r) {
    GroupRecord rec;
    rec.id = r.id();
    rec.canonical_name = r.str();
    rec.aliases.resize(r.u32());
    for (GroupId& a : rec.aliases) a = r.id();
    rec.spectrum.resize(r.u32());
    for (Prime& p : rec.spectrum) p = r.u64();
    rec.max_prime = r.u64();
    rec.spectrum_size = r.u64();
    const std::uint32_t nf = r.u32();
    for (std::uint32_t i = 0; i < nf; ++i) {
        const Prime p = r.u64();
        rec.order_factors.factors[p] = r.u64();
    }
    rec.order_factors.leftover = mpz_class(r.str(), 16);
    return rec;
}

}  // namespace

Digest cache_digest(const PrimeSet& pi, const EnumerateOptions& options, std::string_view version) {
    std::ostringstream text;
    for (Prime p : pi.primes()) text << p << ',';
    text << "|version=" << version << "|k_margin=" << options.k_margin << "|rank_margin=" << options.rank_margin
         << "|early_exit=" << options.rank_early_exit;
    const std::string s = text.str();
    Digest d{};
    unsigned int len = 0;
    if (EVP_Digest(s.data(), s.size(), d.data(), &len, EVP_sha256(), nullptr) != 1 || len != d.size()) {
        throw std::runtime_error("SHA-256 failed");
    }
    return d;
}

std::string to_hex(const Digest& d) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : d) {
        out += kHex[b >> 4];
        out += kHex[b & 15];
    }
    return out;
}

void write_cache(const std::filesystem::path& path, const CacheEntry& entry) {
    Writer w;
    w.raw(kCacheMagic.data(), kCacheMagic.size());
    w.str(entry.version);
    w.raw(entry.digest.data(), entry.digest.size());
    w.u64(entry.records.size());
    for (const GroupRecord& rec : entry.records) write_record(w, rec);

    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
        out.flush();
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot move cache file into place: " + ec.message());
}

std::optional<CacheEntry> read_cache(const std::filesystem::path& path, const Digest& expected, std::ostream& warn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        Reader r(buffer.str());
        std::string magic(kCacheMagic.size(), '\0');
        r.raw(magic.data(), magic.size());
        if (magic != kCacheMagic) throw std::runtime_error("bad magic");
        CacheEntry entry;
        entry.version = r.str();
        r.raw(entry.digest.data(), entry.digest.size());
        if (entry.digest != expected) {
            warn << "warning: cache " << path.string() << " was built for a different configuration; recomputing\n";
            return std::nullopt;
        }
        const std::uint64_t count = r.u64();
        entry.records.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) entry.records.push_back(read_record(r));
        if (!r.done()) throw std::runtime_error("trailing bytes");
        return entry;
    } catch (const std::exception& e) {
        warn << "warning: ignoring unreadable cache " << path.string() << " (" << e.what() << ")\n";
        return std::nullopt;
    }
}

CacheEntry cache_roundtrip(const std::vector<GroupRecord>& records, const PrimeSet& pi, const RunConfig& config,
                           const std::filesystem::path& path) {
    CacheEntry entry{cache_digest(pi, config.enumerate_options()), std::string(kToolVersion), records};
    write_cache(path, entry);
    std::ostringstream sink;
    auto back = read_cache(path, entry.digest, sink);
    if (!back) throw std::runtime_error("cache round-trip failed: " + sink.str());
    return *back;
}

}  // namespace sspec
