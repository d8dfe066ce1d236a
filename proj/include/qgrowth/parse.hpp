#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "qgrowth/presentation.hpp"

namespace qgrowth {

struct ParseError : Error {
	int line;
	int col;
	ParseError(const std::string& msg, int line_, int col_)
			: Error("parse error at " + std::to_string(line_) + ":" +
					std::to_string(col_) + ": " + msg),
			line(line_), col(col_) {}
};

namespace detail {

enum class Tok {
	Ident, Number, Star, Comma, Semi, Colon, Arrow, At, Dot, Plus, Minus,
	Slash, End
};

struct Token {
	Tok kind;
	std::string text;
	int line;
	int col;
};

class Lexer {
public:
	explicit Lexer(const std::string& src) : src_(src) { advance(); }

	const Token& peek() const { return cur_; }

	Token take() {
		Token t = cur_;
		advance();
		return t;
	}

private:
	void advance() {
		skip_space();
		int line = line_, col = col_;
		if (pos_ >= src_.size()) {
			cur_ = {Tok::End, "", line, col};
			return;
		}
		char c = src_[pos_];
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::string s;
			while (pos_ < src_.size()) {
				char d = src_[pos_];
				if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
						d == '*' || d == '\'') {
					s += d;
					step();
				} else {
					break;
				}
			}
			cur_ = {Tok::Ident, s, line, col};
			return;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::string s;
			while (pos_ < src_.size() &&
					std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
				s += src_[pos_];
				step();
			}
			cur_ = {Tok::Number, s, line, col};
			return;
		}
		if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
			step();
			step();
			cur_ = {Tok::Arrow, "->", line, col};
			return;
		}
		Tok k;
		switch (c) {
			case '*': k = Tok::Star; break;
			case ',': k = Tok::Comma; break;
			case ';': k = Tok::Semi; break;
			case ':': k = Tok::Colon; break;
			case '@': k = Tok::At; break;
			case '.': k = Tok::Dot; break;
			case '+': k = Tok::Plus; break;
			case '-': k = Tok::Minus; break;
			case '/': k = Tok::Slash; break;
			default:
				throw ParseError(std::string("unexpected character '") + c + "'",
						line, col);
		}
		step();
		cur_ = {k, std::string(1, c), line, col};
	}

	void skip_space() {
		while (pos_ < src_.size()) {
			char c = src_[pos_];
			if (c == '#') {
				while (pos_ < src_.size() && src_[pos_] != '\n') step();
			} else if (std::isspace(static_cast<unsigned char>(c))) {
				step();
			} else {
				break;
			}
		}
	}

	void step() {
		if (src_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}

	const std::string& src_;
	size_t pos_ = 0;
	int line_ = 1;
	int col_ = 1;
	Token cur_{Tok::End, "", 1, 1};
};

class PresentationParser {
public:
	explicit PresentationParser(const std::string& src) : lex_(src) {}

	GradedPresentation run() {
		bool saw_vertices = false;
		while (lex_.peek().kind != Tok::End) {
			Token head = expect(Tok::Ident, "statement keyword");
			if (head.text == "vertices") {
				parse_vertices();
				saw_vertices = true;
			} else if (head.text == "arrows") {
				if (!saw_vertices)
					throw ParseError("arrows declared before vertices",
							head.line, head.col);
				parse_arrows();
			} else if (head.text == "relations") {
				if (!saw_vertices)
					throw ParseError("relations declared before vertices",
							head.line, head.col);
				parse_relations();
			} else {
				throw ParseError("unknown statement '" + head.text +
						"' (expected vertices, arrows or relations)",
						head.line, head.col);
			}
		}
		if (!saw_vertices)
			throw ParseError("input contains no vertices statement", 1, 1);
		return std::move(gp_);
	}

private:
	Token expect(Tok k, const std::string& what) {
		Token t = lex_.take();
		if (t.kind != k)
			throw ParseError("expected " + what, t.line, t.col);
		return t;
	}

	void parse_vertices() {
		while (true) {
			Token id = expect(Tok::Ident, "vertex name");
			try {
				gp_.quiver.add_vertex(id.text);
			} catch (const ValueError& e) {
				throw ParseError(e.what(), id.line, id.col);
			}
			Token sep = lex_.take();
			if (sep.kind == Tok::Semi) return;
			if (sep.kind != Tok::Comma)
				throw ParseError("expected ',' or ';'", sep.line, sep.col);
		}
	}

	void parse_arrows() {
		while (true) {
			Token name = expect(Tok::Ident, "arrow name");
			expect(Tok::Colon, "':'");
			Token src = expect(Tok::Ident, "source vertex");
			expect(Tok::Arrow, "'->'");
			Token tgt = expect(Tok::Ident, "target vertex");
			expect(Tok::At, "'@'");
			Token deg = expect(Tok::Number, "arrow degree");
			try {
				gp_.quiver.add_arrow(name.text, gp_.quiver.vertex_id(src.text),
						gp_.quiver.vertex_id(tgt.text), std::stoi(deg.text));
			} catch (const ValueError& e) {
				throw ParseError(e.what(), name.line, name.col);
			}
			Token sep = lex_.take();
			if (sep.kind == Tok::Semi) return;
			if (sep.kind != Tok::Comma)
				throw ParseError("expected ',' or ';'", sep.line, sep.col);
		}
	}

	void parse_relations() {
		while (true) {
			gp_.relations.push_back(parse_polynomial());
			Token sep = lex_.take();
			if (sep.kind == Tok::Semi) return;
			if (sep.kind != Tok::Comma)
				throw ParseError("expected ',' or ';'", sep.line, sep.col);
		}
	}

	NcPolynomial parse_polynomial() {
		NcPolynomial poly;
		bool first = true;
		while (true) {
			int sign = 1;
			if (lex_.peek().kind == Tok::Plus) {
				lex_.take();
			} else if (lex_.peek().kind == Tok::Minus) {
				lex_.take();
				sign = -1;
			} else if (!first) {
				break;
			}
			auto [path, coeff] = parse_term();
			poly.add_term(path, sign * coeff);
			first = false;
		}
		Token at = lex_.peek();
		if (poly.zero())
			throw ParseError("relation polynomial is zero", at.line, at.col);
		return poly;
	}

	std::pair<Path, Rational> parse_term() {
		Rational coeff = 1;
		if (lex_.peek().kind == Tok::Number) {
			Token num = lex_.take();
			BigInt p(num.text);
			BigInt q(1);
			if (lex_.peek().kind == Tok::Slash) {
				lex_.take();
				Token den = expect(Tok::Number, "denominator");
				q = BigInt(den.text);
				if (q == 0)
					throw ParseError("zero denominator", den.line, den.col);
			}
			coeff = Rational(p, q);
			coeff.canonicalize();
			expect(Tok::Star, "'*' between coefficient and path");
		}
		Path path;
		while (true) {
			Token id = expect(Tok::Ident, "arrow name");
			if (!gp_.quiver.has_arrow(id.text))
				throw ParseError("unknown arrow '" + id.text + "'",
						id.line, id.col);
			int a = gp_.quiver.arrow_id(id.text);
			if (path.arrows.empty()) {
				path.base = gp_.quiver.arrow(a).src;
			} else if (gp_.quiver.arrow(path.arrows.back()).tgt !=
					gp_.quiver.arrow(a).src) {
				throw ParseError("path is not composable at '" + id.text + "'",
						id.line, id.col);
			}
			path.arrows.push_back(a);
			if (lex_.peek().kind != Tok::Dot) break;
			lex_.take();
		}
		return {path, coeff};
	}

	Lexer lex_;
	GradedPresentation gp_;
};

}  // namespace detail

// Parse presentation text. The result's monomial form is populated
// exactly when every relation is a single path (made monic).
inline ParsedPresentation parse_presentation(const std::string& text) {
	detail::PresentationParser parser(text);
	GradedPresentation gp = parser.run();
	try {
		return classify_presentation(std::move(gp));
	} catch (const ValueError& e) {
		throw ParseError(e.what(), 0, 0);
	}
}

// Emit presentation text in the same grammar parse_presentation reads.
inline std::string serialize_presentation(const GradedPresentation& gp) {
	std::ostringstream out;
	out << "vertices ";
	for (int v = 0; v < gp.quiver.vertex_count(); ++v) {
		if (v) out << ", ";
		out << gp.quiver.vertex_name(v);
	}
	out << ";\n";
	if (gp.quiver.arrow_count() > 0) {
		out << "arrows ";
		for (int a = 0; a < gp.quiver.arrow_count(); ++a) {
			const Arrow& ar = gp.quiver.arrow(a);
			if (a) out << ", ";
			out << ar.name << ":" << gp.quiver.vertex_name(ar.src) << "->"
					<< gp.quiver.vertex_name(ar.tgt) << "@" << ar.degree;
		}
		out << ";\n";
	}
	for (const NcPolynomial& r : gp.relations) {
		out << "relations ";
		bool first = true;
		for (const auto& [p, c] : r.terms()) {
			Rational a = abs(c);
			if (first) {
				if (c < 0) out << "-";
				first = false;
			} else {
				out << (c < 0 ? " - " : " + ");
			}
			if (a != 1) out << a.get_str() << "*";
			for (size_t i = 0; i < p.arrows.size(); ++i) {
				if (i) out << ".";
				out << gp.quiver.arrow(p.arrows[i]).name;
			}
		}
		out << ";\n";
	}
	return out.str();
}

inline std::string serialize_presentation(const MonomialPresentation& mp) {
	GradedPresentation gp;
	gp.quiver = mp.quiver;
	for (const Path& r : mp.relations) {
		NcPolynomial p;
		p.add_term(r, 1);
		gp.relations.push_back(p);
	}
	return serialize_presentation(gp);
}

inline std::string serialize_presentation(const ParsedPresentation& pp) {
	return serialize_presentation(pp.graded);
}

}  // namespace qgrowth
