#include "parse.hpp"

#include <charconv>

#include "blbc/errors.hpp"

namespace blbc::cli {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::string_view whole)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size(), "cannot parse number '" + std::string(whole) + "'");
    return v;
}

template <class F>
void split_commas(std::string_view text, F&& f)
{
    while (true) {
        const auto comma = text.find(',');
        f(trim(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
}

}  // namespace

cplx parse_complex(std::string_view text)
{
    const auto s = trim(text);
    require(!s.empty(), "empty complex value");
    if (s.back() != 'i' && s.back() != 'j')
        return {parse_real(s, text), 0.0};

    const auto body = s.substr(0, s.size() - 1);
    // The imaginary part starts at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    const auto re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    auto im_part = split == std::string_view::npos ? body : body.substr(split);
    double im = 0.0;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = parse_real(im_part, text);
    return {re_part.empty() ? 0.0 : parse_real(re_part, text), im};
}

std::vector<cplx> parse_complex_list(std::string_view text)
{
    std::vector<cplx> out;
    split_commas(text, [&](std::string_view item) { out.push_back(parse_complex(item)); });
    return out;
}

std::vector<int> parse_int_list(std::string_view text)
{
    auto to_int = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        require(ec == std::errc{} && ptr == s.data() + s.size(), "cannot parse integer list '" + std::string(text) + "'");
        return v;
    };
    std::vector<int> out;
    const auto t = trim(text);
    if (t.find(':') != std::string_view::npos) {
        const auto a = t.find(':');
        const auto b = t.find(':', a + 1);
        const int first = to_int(t.substr(0, a));
        const int last = to_int(t.substr(a + 1, b == std::string_view::npos ? std::string_view::npos : b - a - 1));
        const int step = b == std::string_view::npos ? 1 : to_int(t.substr(b + 1));
        require(step >= 1 && last >= first, "range '" + std::string(text) + "' must be first:last[:step] with step >= 1");
        for (int v = first; v <= last; v += step)
            out.push_back(v);
        return out;
    }
    split_commas(t, [&](std::string_view item) { out.push_back(to_int(item)); });
    return out;
}

}  // namespace blbc::cli
