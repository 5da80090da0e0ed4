#include "rsbf/truth_table.hpp"

#include <cctype>
#include <sstream>

namespace rsbf {

bool is_rotation_symmetric(const TruthTable& tt) {
    const std::size_t size = tt.size();
    for (std::size_t i = 0; i < size; ++i) {
        const std::uint32_t j = rotate_input(static_cast<std::uint32_t>(i), tt.n);
        if (tt.bits[i] != tt.bits[j]) return false;
    }
    return true;
}

std::string format_table(const TruthTable& tt) {
    std::string out = "n=" + std::to_string(tt.n) + "\n";
    out.reserve(out.size() + tt.size() + 1);
    for (auto b : tt.bits) out.push_back(b ? '1' : '0');
    out.push_back('\n');
    return out;
}

std::string table_hex_digits(const TruthTable& tt) {
    if (tt.n < 2)
        throw std::invalid_argument("hex form needs at least 4 table rows (n >= 2)");
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(tt.size() / 4);
    for (std::size_t i = 0; i < tt.size(); i += 4) {
        const int nibble = (tt.bits[i] << 3) | (tt.bits[i + 1] << 2) |
                           (tt.bits[i + 2] << 1) | tt.bits[i + 3];
        out.push_back(digits[nibble]);
    }
    return out;
}

std::string format_table_hex(const TruthTable& tt) {
    return "n=" + std::to_string(tt.n) + "\n" + table_hex_digits(tt) + "\n";
}

TruthTable table_from_hex_digits(int n, const std::string& digits) {
    check_var_count(n);
    if (n < 2) throw std::invalid_argument("hex form needs n >= 2");
    const std::size_t size = std::size_t(1) << n;
    if (digits.size() != size / 4)
        throw std::invalid_argument("hex form needs 2^n/4 digits");
    TruthTable tt = TruthTable::zeros(n);
    for (std::size_t d = 0; d < digits.size(); ++d) {
        const char c = digits[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
        tt.bits[4 * d + 0] = (v >> 3) & 1;
        tt.bits[4 * d + 1] = (v >> 2) & 1;
        tt.bits[4 * d + 2] = (v >> 1) & 1;
        tt.bits[4 * d + 3] = v & 1;
    }
    return tt;
}

namespace {

int parse_header(const std::string& line) {
    if (line.rfind("n=", 0) != 0)
        throw ParseError("expected header line \"n=<k>\"", 1, 1);
    int n = 0;
    std::size_t pos = 2;
    if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
        throw ParseError("expected digits after \"n=\"", 1, 3);
    for (; pos < line.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(line[pos])))
            throw ParseError("trailing characters after variable count", 1, int(pos) + 1);
        n = n * 10 + (line[pos] - '0');
        if (n > 1000) break;
    }
    if (n < kMinVars || n > kMaxVars)
        throw ParseError("variable count must be in [1, 16]", 1, 3);
    return n;
}

std::string read_line(std::istringstream& in) {
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

TruthTable parse_table(const std::string& text) {
    std::istringstream in(text);
    const int n = parse_header(read_line(in));
    const std::string body = read_line(in);
    const std::size_t size = std::size_t(1) << n;

    if (body.size() == size) {
        TruthTable tt = TruthTable::zeros(n);
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '0') tt.bits[i] = 0;
            else if (body[i] == '1') tt.bits[i] = 1;
            else throw ParseError("expected '0' or '1'", 2, int(i) + 1);
        }
        return tt;
    }
    if (n >= 2 && body.size() == size / 4) {
        try {
            return table_from_hex_digits(n, body);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 2, 1);
        }
    }
    throw ParseError("body must hold 2^n bits or 2^n/4 hex digits, got " +
                         std::to_string(body.size()) + " characters",
                     2, 1);
}

}  // namespace rsbf
