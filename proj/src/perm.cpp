#include "hecke/perm.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

Perm Perm::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
            throw precondition_error("BadPermutation", "images are not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
    Perm p(degree);
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) || c == ' ') t.push_back(c);
    if (t == "e" || t == "()" || t.empty()) return p;

    size_t pos = 0;
    std::vector<int>& img = p.img_;
    while (pos < t.size()) {
        if (t[pos] != '(')
            throw parse_error("ParseError", "expected '(' in permutation '" + text + "'");
        size_t close = t.find(')', pos);
        if (close == std::string::npos)
            throw parse_error("ParseError", "unbalanced ')' in permutation '" + text + "'");
        std::string body = t.substr(pos + 1, close - pos - 1);
        std::istringstream is(body);
        std::vector<int> cyc;
        std::string tok;
        while (is >> tok) {
            // allow comma separators
            std::string digits;
            for (char c : tok)
                if (c != ',') digits.push_back(c);
            if (digits.empty()) continue;
            int v;
            try {
                v = std::stoi(digits);
            } catch (const std::logic_error&) {
                throw parse_error("ParseError", "bad point '" + tok + "' in '" + text + "'");
            }
            if (v < 1 || v > degree)
                throw parse_error("ParseError", "point out of range in '" + text + "'");
            cyc.push_back(v - 1);
        }
        for (size_t i = 0; i + 1 < cyc.size(); ++i) img[static_cast<size_t>(cyc[i])] = cyc[i + 1];
        if (cyc.size() > 1) img[static_cast<size_t>(cyc.back())] = cyc.front();
        pos = close + 1;
    }
    // from_images-level validation
    return from_images(p.img_);
}

Perm Perm::then(const Perm& next) const {
    if (degree() != next.degree())
        throw precondition_error("AmbientMismatch", "permutation degree mismatch");
    Perm out;
    out.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        out.img_[i] = next.img_[static_cast<size_t>(img_[i])];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return out;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Perm::to_cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t start = 0; start < img_.size(); ++start) {
        if (seen[start] || img_[start] == static_cast<int>(start)) continue;
        any = true;
        os << "(";
        size_t p = start;
        bool first = true;
        while (!seen[p]) {
            seen[p] = true;
            if (!first) os << " ";
            os << (p + 1);
            first = false;
            p = static_cast<size_t>(img_[p]);
        }
        os << ")";
    }
    return any ? os.str() : "()";
}

}  // namespace hecke
