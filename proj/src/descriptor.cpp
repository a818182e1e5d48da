#include "bhverify/descriptor.hpp"

#include "bhverify/pretzel.hpp"
#include "bhverify/torus.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bhv {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad descriptor '" + std::string(text) + "' at position " +
                                    std::to_string(pos) + ": " + what);
    }

    bool consume(std::string_view token) {
        if (text.substr(pos, token.size()) != token) return false;
        pos += token.size();
        return true;
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    long long integer() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) fail("expected an integer");
        long long value = 0;
        try {
            value = std::stoll(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            pos = start;
            fail("integer out of range");
        }
        return value;
    }

    bool done() const { return pos == text.size(); }
};

KnotDescriptor parse_one(Cursor& cur) {
    KnotDescriptor d;
    if (cur.consume("torus:")) {
        d.kind = KnotDescriptor::Kind::Torus;
        d.r = cur.integer();
        cur.expect(',');
        d.s = cur.integer();
        return d;
    }
    if (cur.consume("pretzel:")) {
        d.kind = KnotDescriptor::Kind::Pretzel;
        d.n = cur.integer();
        return d;
    }
    if (cur.consume("connectsum:[")) {
        d.kind = KnotDescriptor::Kind::ConnectSum;
        d.summands.push_back(parse_one(cur));
        while (!cur.consume("]")) {
            cur.expect(',');
            d.summands.push_back(parse_one(cur));
        }
        return d;
    }
    cur.fail("expected torus:, pretzel: or connectsum:[");
}

int checked_int(long long v, const char* what) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw std::invalid_argument(std::string(what) + " parameter out of range");
    return static_cast<int>(v);
}

}  // namespace

std::string KnotDescriptor::to_string() const {
    switch (kind) {
        case Kind::Torus:
            return "torus:" + std::to_string(r) + "," + std::to_string(s);
        case Kind::Pretzel:
            return "pretzel:" + std::to_string(n);
        case Kind::ConnectSum: {
            std::string out = "connectsum:[";
            for (std::size_t i = 0; i < summands.size(); ++i) {
                if (i) out += ",";
                out += summands[i].to_string();
            }
            return out + "]";
        }
    }
    throw std::logic_error("unreachable descriptor kind");
}

KnotDescriptor KnotDescriptor::parse(std::string_view text) {
    Cursor cur{text};
    KnotDescriptor d = parse_one(cur);
    if (!cur.done()) cur.fail("trailing input");
    return d;
}

KnotVerdict verify_descriptor(const KnotDescriptor& descriptor, const RunConfig& config) {
    config.validate();
    switch (descriptor.kind) {
        case KnotDescriptor::Kind::Torus:
            return verify_torus(checked_int(descriptor.r, "torus"),
                                checked_int(descriptor.s, "torus"), gb_options(config),
                                config.bezout_t_bound);
        case KnotDescriptor::Kind::Pretzel:
            return verify_pretzel(checked_int(descriptor.n, "pretzel"), gb_options(config));
        case KnotDescriptor::Kind::ConnectSum: {
            const std::size_t count = descriptor.summands.size();
            std::vector<KnotVerdict> parts(count);
            const std::size_t workers =
                std::min<std::size_t>(count, static_cast<std::size_t>(config.jobs));
            if (workers <= 1) {
                for (std::size_t i = 0; i < count; ++i)
                    parts[i] = verify_descriptor(descriptor.summands[i], config);
            } else {
                std::vector<std::exception_ptr> errors(count);
                std::vector<std::thread> pool;
                std::atomic<std::size_t> next{0};
                for (std::size_t w = 0; w < workers; ++w) {
                    pool.emplace_back([&] {
                        for (std::size_t i = next++; i < count; i = next++) {
                            try {
                                parts[i] = verify_descriptor(descriptor.summands[i], config);
                            } catch (...) {
                                errors[i] = std::current_exception();
                            }
                        }
                    });
                }
                for (std::thread& t : pool) t.join();
                for (const std::exception_ptr& e : errors)
                    if (e) std::rethrow_exception(e);
            }
            return connect_sum(parts);
        }
    }
    throw std::logic_error("unreachable descriptor kind");
}

KnotVerdict verify_descriptor(std::string_view text, const RunConfig& config) {
    return verify_descriptor(KnotDescriptor::parse(text), config);
}

}  // namespace bhv
