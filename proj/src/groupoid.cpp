#include "xcc/groupoid.hpp"

#include <sstream>

namespace xcc {

int Graph::add_object(const std::string& name) {
    if (find_object(name) >= 0) throw Error("Graph: duplicate object name '" + name + "'");
    object_names_.push_back(name);
    return object_count() - 1;
}

int Graph::add_edge(const std::string& name, int src, int tgt) {
    if (src < 0 || src >= object_count() || tgt < 0 || tgt >= object_count())
        throw Error("Graph: edge '" + name + "' has missing endpoint");
    if (find_edge(name) >= 0) throw Error("Graph: duplicate edge name '" + name + "'");
    edges_.push_back({name, src, tgt});
    return edge_count() - 1;
}

int Graph::find_object(const std::string& name) const {
    for (int i = 0; i < object_count(); ++i)
        if (object_names_[i] == name) return i;
    return -1;
}

int Graph::find_edge(const std::string& name) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].name == name) return i;
    return -1;
}

Word Word::make(const Graph& g, std::span<const Letter> letters, int at) {
    Word w;
    if (letters.empty()) {
        if (at < 0 || at >= g.object_count())
            throw Error("Word: identity word needs a valid object");
        w.start_ = w.end_ = at;
        return w;
    }
    w.start_ = letter_src(g, letters.front());
    int cur = w.start_;
    for (Letter l : letters) {
        int e = edge_of(l);
        if (e < 0 || e >= g.edge_count()) throw Error("Word: unknown edge letter");
        if (letter_src(g, l) != cur)
            throw Error("Word: letters not composable at '" + g.object_name(cur) + "'");
        cur = letter_tgt(g, l);
        // reduce on the fly
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    w.end_ = cur;
    return w;
}

Word reduce(const Word& w) {
    Word r;
    r.start_ = w.start_;
    r.end_ = w.end_;
    for (Letter l : w.letters_) {
        if (!r.letters_.empty() && r.letters_.back() == -l)
            r.letters_.pop_back();
        else
            r.letters_.push_back(l);
    }
    return r;
}

Word compose(const Word& u, const Word& v) {
    if (u.end() != v.start())
        throw Error("compose: endpoint mismatch");
    Word r;
    r.start_ = u.start_;
    r.end_ = v.end_;
    r.letters_ = u.letters_;
    for (Letter l : v.letters_) {
        if (!r.letters_.empty() && r.letters_.back() == -l)
            r.letters_.pop_back();
        else
            r.letters_.push_back(l);
    }
    return r;
}

Word invert(const Word& w) {
    Word r;
    r.start_ = w.end_;
    r.end_ = w.start_;
    r.letters_.reserve(w.letters_.size());
    for (size_t i = w.letters_.size(); i-- > 0;) r.letters_.push_back(-w.letters_[i]);
    return r;
}

std::string to_string(const Graph& g, const Word& w) {
    if (w.is_identity()) return "0_" + g.object_name(w.start());
    std::ostringstream os;
    bool first = true;
    for (Letter l : w.letters()) {
        if (positive(l))
            os << (first ? "" : " + ");
        else
            os << (first ? "- " : " - ");
        os << g.edge_name(edge_of(l));
        first = false;
    }
    return os.str();
}

Word parse_word(const Graph& g, const std::string& text) {
    // tokens: names, '+', '-'; identity literal 0_<object>
    std::vector<Letter> letters;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (text.compare(i, 2, "0_") == 0) {
        std::string obj = text.substr(i + 2);
        while (!obj.empty() && std::isspace(static_cast<unsigned char>(obj.back()))) obj.pop_back();
        int p = g.find_object(obj);
        if (p < 0) throw Error("parse_word: unknown object '" + obj + "'");
        return Word::identity(p);
    }
    bool negative = false;
    bool expect_name = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (expect_name && !letters.empty())
                throw Error("parse_word: consecutive signs");
            negative = (c == '-');
            expect_name = true;
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '+' &&
               text[j] != '-')
            ++j;
        std::string name = text.substr(i, j - i);
        int e = g.find_edge(name);
        if (e < 0) throw Error("parse_word: unknown edge '" + name + "'");
        letters.push_back(negative ? neg(e) : pos(e));
        negative = false;
        expect_name = false;
        i = j;
    }
    if (letters.empty()) throw Error("parse_word: empty word literal (use 0_<object>)");
    return Word::make(g, letters);
}

} // namespace xcc
