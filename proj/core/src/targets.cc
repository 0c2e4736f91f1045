#include <pmramsey/errors.hh>
#include <pmramsey/targets.hh>

#include <algorithm>
#include <numeric>

using namespace pmramsey;

TargetVector::TargetVector(std::vector<int> values)
{
    if (values.empty())
        throw InvalidInput("target vector must not be empty");
    if (values.size() > 64)
        throw InvalidInput("at most 64 colours are supported");
    for (int v : values)
        if (v < 2)
            throw InvalidInput("targets must be at least 2, got " + std::to_string(v));

    _order.resize(values.size());
    std::iota(_order.begin(), _order.end(), 0);
    std::stable_sort(_order.begin(), _order.end(), [&](int a, int b) { return values[a] > values[b]; });
    _values.reserve(values.size());
    for (int i : _order)
        _values.push_back(values[i]);
}

auto TargetVector::uniform(int p, int r) -> TargetVector
{
    if (r < 1)
        throw InvalidInput("need at least one colour");
    return TargetVector(std::vector<int>(static_cast<std::size_t>(r), p));
}

auto TargetVector::sum() const -> long long
{
    return std::accumulate(_values.begin(), _values.end(), 0LL);
}

auto TargetVector::key() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < _values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(_values[i]);
    }
    return out;
}

auto pmramsey::normalize_targets(std::span<const int> raw, bool strip_twos) -> std::optional<TargetVector>
{
    if (std::none_of(raw.begin(), raw.end(), [](int v) { return v >= 2; }))
        throw InvalidInput("at least one target must be 2 or more");
    std::vector<int> kept;
    for (int v : raw)
        if (v >= (strip_twos ? 3 : 2))
            kept.push_back(v);
    if (kept.empty())
        return std::nullopt;
    return TargetVector(std::move(kept));
}
