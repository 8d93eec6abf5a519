#include "modann/spec.hpp"

#include "modann/error.hpp"

#include <cctype>
#include <limits>

namespace modann {

SpecSyntaxError::SpecSyntaxError(const std::string& message, std::size_t position)
    : InvalidInput(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }
    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t position() {
        skipSpace();
        return pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    Int number(const char* what) {
        skipSpace();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const Int digit = text_[pos_] - '0';
            if (v > (std::numeric_limits<Int>::max() - digit) / 10)
                throw SpecSyntaxError("number too large", start);
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& message) { throw SpecSyntaxError(message, position()); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Ring parseRingSpec(std::string_view text) {
    Cursor c(text);
    c.expect('Z', "'Z'");
    if (c.atEnd()) return Ring::integers();
    c.expect('/', "'/' or end of ring spec");
    const std::size_t at = c.position();
    const Int n = c.number("modulus");
    if (!c.atEnd()) c.fail("unexpected trailing input");
    if (n < 2) throw SpecSyntaxError("modulus must be >= 2", at);
    return Ring::modular(n);
}

Module parseModuleSpec(std::string_view text, const Ring& ring) {
    Cursor c(text);
    std::vector<Int> factors;
    Int freeRank = 0;
    bool sawFree = false;
    do {
        const std::size_t at = c.position();
        if (c.accept('C')) {
            const Int n = c.number("cyclic order");
            if (n < 2) throw SpecSyntaxError("cyclic order must be >= 2", at);
            if (ring.isModular() && ring.modulus() % n != 0)
                throw InvalidInput("C" + std::to_string(n) + " is incompatible with modulus " +
                                   std::to_string(ring.modulus()));
            factors.push_back(n);
        } else if (c.accept('F')) {
            const Int k = c.number("free rank");
            if (k < 1) throw SpecSyntaxError("free rank must be >= 1", at);
            if (ring.isModular()) throw InvalidInput("free summands are only supported over Z");
            if (sawFree) throw SpecSyntaxError("free rank given twice", at);
            sawFree = true;
            freeRank = k;
        } else {
            c.fail("expected 'C<n>' or 'F<k>'");
        }
    } while (c.accept('+'));
    if (!c.atEnd()) c.fail("unexpected trailing input");
    if (sawFree && !factors.empty()) throw OutOfScope("mixed torsion and free rank unsupported");
    return sawFree ? Module::freeOfRank(freeRank) : Module::finite(ring, std::move(factors));
}

Element parseElement(std::string_view text) {
    Cursor c(text);
    const bool paren = c.accept('(');
    Element x;
    do {
        const bool negative = c.accept('-');
        const Int v = c.number("integer");
        x.coords.push_back(negative ? -v : v);
    } while (c.accept(','));
    if (paren) c.expect(')', "')'");
    if (!c.atEnd()) c.fail("unexpected trailing input");
    return x;
}

} // namespace modann
