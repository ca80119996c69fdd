#pragma once

/// \file
/// \brief Complex literals of the form "a+bi", "a-bi", "a", "bi", "i", "-i".

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include "poncelet/core.hpp"

namespace poncelet::io {

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("invalid complex literal: '" + std::string(whole) + "'");
    return v;
}

} // namespace detail

inline CPoint parse_complex(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("invalid complex literal: empty");
    if (s.back() != 'i')
        return {detail::parse_real(s, text), 0.0};

    const std::string_view body(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    const std::string_view im = split == std::string_view::npos ? body : body.substr(split);
    double imag = 0.0;
    if (im.empty() || im == "+")
        imag = 1.0;
    else if (im == "-")
        imag = -1.0;
    else
        imag = detail::parse_real(im, text);
    return {re.empty() ? 0.0 : detail::parse_real(re, text), imag};
}

/// Round-trippable "a+bi" with 17 significant digits.
inline std::string format_complex(CPoint z)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace poncelet::io
