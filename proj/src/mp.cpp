#include "partalg/mp.hpp"

#include "partalg/error.hpp"

namespace partalg {

Rat parse_rational(const std::string& text) {
    if (text.empty()) fail("syntax", "empty rational literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            fail("syntax", "bad character in rational literal: " + text);
    Rat r;
    if (r.set_str(text, 10) != 0) fail("syntax", "malformed rational literal: " + text);
    if (r.get_den() == 0) fail("range", "zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

}  // namespace partalg
