#include "app/targets_arg.hh"

#include <pmramsey/errors.hh>

#include <charconv>
#include <string_view>

namespace {

auto to_int(std::string_view s, const std::string &whole) -> int
{
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty())
        throw pmramsey::InvalidInput("bad target list '" + whole + "'");
    return v;
}

} // namespace

auto pmramsey::app::parse_targets(const std::string &text) -> std::vector<int>
{
    std::vector<int> out;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        auto star = item.find('*');
        int value = to_int(item.substr(0, star), text);
        int times = star == std::string_view::npos ? 1 : to_int(item.substr(star + 1), text);
        if (value < 1 || times < 1 || times > 64)
            throw InvalidInput("bad target list '" + text + "'");
        out.insert(out.end(), static_cast<std::size_t>(times), value);
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    if (out.size() > 64)
        throw InvalidInput("at most 64 targets");
    return out;
}
