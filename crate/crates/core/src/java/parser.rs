use super::lexer::{tokenize, Token, TokenKind};
use super::*;

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
    "sealed",
];

const PRIMITIVES: &[&str] = &[
    "byte", "short", "char", "int", "long", "float", "double", "boolean", "void",
];

const TYPE_KEYWORDS: &[&str] = &["class", "interface", "enum", "record"];

/// Reserved words that can never start a type or name an identifier.
const RESERVED: &[&str] = &[
    "if",
    "else",
    "while",
    "do",
    "for",
    "try",
    "catch",
    "finally",
    "return",
    "throw",
    "break",
    "continue",
    "switch",
    "case",
    "new",
    "this",
    "super",
    "null",
    "true",
    "false",
    "instanceof",
    "class",
    "interface",
    "enum",
    "synchronized",
    "assert",
];

type PResult<T> = Result<T, Diagnostic>;

/// Parses one compilation unit of the supported Java subset.
pub fn parse_source(src: &str, file: &str) -> Result<CompilationUnit, Diagnostic> {
    let toks = tokenize(src, file)?;
    let mut p = Parser {
        src,
        file,
        toks,
        pos: 0,
    };
    p.compilation_unit()
}

struct Parser<'a> {
    src: &'a str,
    file: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    // ---- token helpers -------------------------------------------------

    fn tok(&self, i: usize) -> &Token {
        &self.toks[i.min(self.toks.len() - 1)]
    }

    fn peek_text(&self, ahead: usize) -> &'a str {
        let t = self.tok(self.pos + ahead);
        &self.src[t.span.start..t.span.end]
    }

    fn kind(&self, ahead: usize) -> TokenKind {
        self.tok(self.pos + ahead).kind
    }

    fn is(&self, text: &str) -> bool {
        self.kind(0) != TokenKind::Eof
            && !matches!(self.kind(0), TokenKind::Str | TokenKind::Char)
            && self.peek_text(0) == text
    }

    fn is_at(&self, ahead: usize, text: &str) -> bool {
        self.kind(ahead) != TokenKind::Eof
            && !matches!(self.kind(ahead), TokenKind::Str | TokenKind::Char)
            && self.peek_text(ahead) == text
    }

    fn at_eof(&self) -> bool {
        self.kind(0) == TokenKind::Eof
    }

    fn is_ident(&self, ahead: usize) -> bool {
        self.kind(ahead) == TokenKind::Ident && !RESERVED.contains(&self.peek_text(ahead))
    }

    /// Tokens `i` and `i+1` touch with no whitespace between them.
    fn adjacent(&self, i: usize) -> bool {
        self.tok(i).span.end == self.tok(i + 1).span.start
    }

    fn bump(&mut self) -> Span {
        let s = self.tok(self.pos).span;
        if !self.at_eof() {
            self.pos += 1;
        }
        s
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.is(text) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let t = self.tok(self.pos);
        Err(Diagnostic {
            file: self.file.to_string(),
            line: t.span.line,
            column: t.span.column,
            message: msg.into(),
        })
    }

    fn found(&self) -> String {
        if self.at_eof() {
            "end of file".to_string()
        } else {
            format!("`{}`", self.peek_text(0))
        }
    }

    fn expect(&mut self, text: &str) -> PResult<Span> {
        if self.is(text) {
            Ok(self.bump())
        } else {
            self.error(format!("expected `{text}`, found {}", self.found()))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        if self.is_ident(0) {
            let s = self.bump();
            Ok(s.text(self.src).to_string())
        } else {
            self.error(format!("expected identifier, found {}", self.found()))
        }
    }

    fn span_from(&self, start_tok: usize) -> Span {
        let first = self.tok(start_tok).span;
        let last = if self.pos > start_tok {
            self.tok(self.pos - 1).span
        } else {
            first
        };
        first.to(last)
    }

    /// Runs `f` speculatively, rewinding on failure.
    fn attempt<T>(&mut self, f: impl FnOnce(&mut Self) -> PResult<T>) -> Option<T> {
        let save = self.pos;
        match f(self) {
            Ok(v) => Some(v),
            Err(_) => {
                self.pos = save;
                None
            }
        }
    }

    /// Skips a balanced `open ... close` group starting at the current token.
    fn skip_balanced(&mut self, open: &str, close: &str) -> PResult<()> {
        self.expect(open)?;
        let mut depth = 1;
        while depth > 0 {
            if self.at_eof() {
                return self.error(format!("unbalanced `{open}`"));
            }
            if self.is(open) {
                depth += 1;
            } else if self.is(close) {
                depth -= 1;
            }
            self.bump();
        }
        Ok(())
    }

    /// Skips to (and consumes) the next `;` at bracket depth zero.
    fn skip_to_semicolon(&mut self) -> PResult<()> {
        let mut depth = 0i32;
        loop {
            if self.at_eof() {
                return self.error("expected `;`");
            }
            if depth == 0 && self.is(";") {
                self.bump();
                return Ok(());
            }
            if self.is("(") || self.is("{") || self.is("[") {
                depth += 1;
            } else if self.is(")") || self.is("}") || self.is("]") {
                depth -= 1;
                if depth < 0 {
                    return self.error(format!("expected `;`, found {}", self.found()));
                }
            }
            self.bump();
        }
    }

    fn matching_paren(&self, at: usize) -> Option<usize> {
        let mut depth = 0;
        let mut i = at;
        while self.tok(i).kind != TokenKind::Eof {
            let t = self.tok(i).text(self.src);
            if self.tok(i).kind == TokenKind::Punct {
                if t == "(" {
                    depth += 1;
                } else if t == ")" {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i);
                    }
                }
            }
            i += 1;
        }
        None
    }

    // ---- declarations --------------------------------------------------

    fn compilation_unit(&mut self) -> PResult<CompilationUnit> {
        let mut unit = CompilationUnit::default();
        while !self.at_eof() {
            if self.is("package") || self.is("import") {
                self.skip_to_semicolon()?;
                continue;
            }
            if self.eat(";") {
                continue;
            }
            let start = self.pos;
            self.modifiers()?;
            if self.at_type_keyword() {
                unit.types.push(self.type_decl(start)?);
            } else {
                match self.member(start, "")? {
                    Member::Method(m) => unit.free_methods.push(m),
                    Member::Type(t) => unit.types.push(t),
                    Member::Other => {}
                }
            }
        }
        Ok(unit)
    }

    fn at_type_keyword(&self) -> bool {
        (self.is("@") && self.is_at(1, "interface"))
            || TYPE_KEYWORDS.iter().any(|k| self.is(k)) && self.kind(1) == TokenKind::Ident
    }

    fn annotation(&mut self) -> PResult<()> {
        self.expect("@")?;
        self.ident()?;
        while self.is(".") && self.kind(1) == TokenKind::Ident {
            self.bump();
            self.bump();
        }
        if self.is("(") {
            self.skip_balanced("(", ")")?;
        }
        Ok(())
    }

    fn modifiers(&mut self) -> PResult<()> {
        loop {
            if self.is("@") && !self.is_at(1, "interface") {
                self.annotation()?;
            } else if MODIFIERS.iter().any(|m| self.is(m)) && !self.is_at(1, "(") {
                self.bump();
            } else if self.is("non") && self.is_at(1, "-") && self.is_at(2, "sealed") {
                self.pos += 3;
            } else {
                return Ok(());
            }
        }
    }

    fn type_decl(&mut self, start: usize) -> PResult<TypeDecl> {
        let is_enum = self.is("enum");
        let is_record = self.is("record");
        if self.eat("@") {
            self.expect("interface")?;
        } else {
            self.bump();
        }
        let name = self.ident()?;
        if is_record && self.is("(") {
            self.skip_balanced("(", ")")?;
        }
        while !self.is("{") {
            if self.at_eof() {
                return self.error(format!("expected body of type `{name}`"));
            }
            self.bump();
        }
        let (methods, nested) = self.type_body(&name, is_enum)?;
        Ok(TypeDecl {
            name,
            methods,
            nested,
            span: self.span_from(start),
        })
    }

    fn type_body(&mut self, name: &str, is_enum: bool) -> PResult<(Vec<MethodDecl>, Vec<TypeDecl>)> {
        self.expect("{")?;
        if is_enum {
            let mut depth = 0i32;
            loop {
                if self.at_eof() {
                    return self.error("unterminated enum body");
                }
                if depth == 0 && self.is(";") {
                    self.bump();
                    break;
                }
                if depth == 0 && self.is("}") {
                    break;
                }
                if self.is("(") || self.is("{") {
                    depth += 1;
                } else if self.is(")") || self.is("}") {
                    depth -= 1;
                }
                self.bump();
            }
        }
        let mut methods = Vec::new();
        let mut nested = Vec::new();
        while !self.eat("}") {
            if self.at_eof() {
                return self.error(format!("unterminated body of type `{name}`"));
            }
            if self.eat(";") {
                continue;
            }
            let start = self.pos;
            self.modifiers()?;
            if self.is("{") {
                self.skip_balanced("{", "}")?;
                continue;
            }
            if self.at_type_keyword() {
                nested.push(self.type_decl(start)?);
                continue;
            }
            match self.member(start, name)? {
                Member::Method(m) => methods.push(m),
                Member::Type(t) => nested.push(t),
                Member::Other => {}
            }
        }
        Ok((methods, nested))
    }

    /// Method, constructor or field, after modifiers have been consumed.
    fn member(&mut self, start: usize, class_name: &str) -> PResult<Member> {
        if self.is("<") {
            self.skip_balanced("<", ">")?;
        }
        if self.is_ident(0) && self.is_at(1, "(") {
            let name = self.ident()?;
            if !class_name.is_empty() && name != class_name {
                return self.error(format!("method `{name}` is missing a return type"));
            }
            return self.method_rest(start, name, None).map(Member::Method);
        }
        let ty = self.parse_type()?;
        let name = self.ident()?;
        if self.is("(") {
            return self.method_rest(start, name, Some(ty)).map(Member::Method);
        }
        self.skip_to_semicolon()?;
        Ok(Member::Other)
    }

    fn method_rest(&mut self, start: usize, name: String, ret: Option<String>) -> PResult<MethodDecl> {
        self.expect("(")?;
        let mut params = Vec::new();
        if !self.is(")") {
            loop {
                params.push(self.param()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        while self.is("[") && self.is_at(1, "]") {
            self.pos += 2;
        }
        if self.eat("throws") {
            loop {
                self.parse_type()?;
                if !self.eat(",") {
                    break;
                }
            }
        }
        let body = if self.is("{") {
            Some(self.block()?)
        } else {
            if self.eat("default") {
                self.skip_to_semicolon()?;
            } else {
                self.expect(";")?;
            }
            None
        };
        Ok(MethodDecl {
            name,
            params,
            return_type: ret,
            body,
            span: self.span_from(start),
        })
    }

    fn param(&mut self) -> PResult<Param> {
        let start = self.pos;
        self.modifiers()?;
        let mut ty = self.parse_type()?;
        if self.eat("...") {
            ty.push_str("...");
        }
        let name = if self.is("this") {
            self.bump();
            "this".to_string()
        } else {
            self.ident()?
        };
        while self.is("[") && self.is_at(1, "]") {
            self.pos += 2;
            ty.push_str("[]");
        }
        Ok(Param {
            ty,
            name,
            span: self.span_from(start),
        })
    }

    // ---- types ---------------------------------------------------------

    /// Parses a type and returns its compact text (`Map<K,List<V>>[]`).
    fn parse_type(&mut self) -> PResult<String> {
        let mut parts: Vec<&'a str> = Vec::new();
        while self.is("@") {
            self.annotation()?;
        }
        if PRIMITIVES.iter().any(|p| self.is(p)) {
            parts.push(self.bump().text(self.src));
        } else {
            if !self.is_ident(0) {
                return self.error(format!("expected type, found {}", self.found()));
            }
            parts.push(self.bump().text(self.src));
            loop {
                if self.is("<") {
                    self.type_args(&mut parts)?;
                }
                if self.is(".") && self.is_ident(1) {
                    parts.push(self.bump().text(self.src));
                    parts.push(self.bump().text(self.src));
                } else {
                    break;
                }
            }
        }
        while self.is("[") && self.is_at(1, "]") {
            parts.push("[");
            parts.push("]");
            self.pos += 2;
        }
        Ok(join_type_tokens(&parts))
    }

    fn type_args(&mut self, parts: &mut Vec<&'a str>) -> PResult<()> {
        parts.push(self.bump().text(self.src)); // <
        if self.is(">") {
            parts.push(self.bump().text(self.src));
            return Ok(());
        }
        loop {
            if self.is("?") {
                parts.push(self.bump().text(self.src));
                if self.is("extends") || self.is("super") {
                    parts.push(self.bump().text(self.src));
                    self.type_into(parts)?;
                }
            } else {
                self.type_into(parts)?;
            }
            if self.is(",") {
                parts.push(self.bump().text(self.src));
                continue;
            }
            if self.is(">") {
                parts.push(self.bump().text(self.src));
                return Ok(());
            }
            return self.error(format!("expected `>` in type arguments, found {}", self.found()));
        }
    }

    fn type_into(&mut self, parts: &mut Vec<&'a str>) -> PResult<()> {
        let start = self.pos;
        self.parse_type()?;
        for i in start..self.pos {
            let t = self.tok(i).text(self.src);
            if t != "@" {
                parts.push(t);
            }
        }
        Ok(())
    }

    // ---- statements ----------------------------------------------------

    fn block(&mut self) -> PResult<Block> {
        let start = self.pos;
        self.expect("{")?;
        let mut stmts = Vec::new();
        while !self.is("}") {
            if self.at_eof() {
                return self.error("expected `}`, found end of file");
            }
            stmts.push(self.statement()?);
        }
        self.bump();
        Ok(Block {
            stmts,
            span: self.span_from(start),
        })
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let start = self.pos;
        if self.is("{") {
            return self.block().map(Stmt::Block);
        }
        if self.eat(";") {
            return Ok(Stmt::Jump(self.span_from(start)));
        }
        if self.kind(0) == TokenKind::Ident {
            match self.peek_text(0) {
                "if" => return self.if_stmt(),
                "while" => {
                    self.bump();
                    let cond = self.paren_expr()?;
                    let body = Box::new(self.statement()?);
                    return Ok(Stmt::While {
                        cond,
                        body,
                        span: self.span_from(start),
                    });
                }
                "do" => {
                    self.bump();
                    let body = Box::new(self.statement()?);
                    self.expect("while")?;
                    let cond = self.paren_expr()?;
                    self.expect(";")?;
                    return Ok(Stmt::DoWhile {
                        body,
                        cond,
                        span: self.span_from(start),
                    });
                }
                "for" => return self.for_stmt(),
                "try" => return self.try_stmt(),
                "return" => {
                    self.bump();
                    let value = if self.is(";") { None } else { Some(self.expr()?) };
                    self.expect(";")?;
                    return Ok(Stmt::Return(value, self.span_from(start)));
                }
                "throw" => {
                    self.bump();
                    let e = self.expr()?;
                    self.expect(";")?;
                    return Ok(Stmt::Throw(e, self.span_from(start)));
                }
                "break" | "continue" => {
                    self.bump();
                    if self.is_ident(0) {
                        self.bump();
                    }
                    self.expect(";")?;
                    return Ok(Stmt::Jump(self.span_from(start)));
                }
                "switch" => {
                    self.bump();
                    self.paren_expr()?;
                    self.skip_balanced("{", "}")?;
                    self.eat(";");
                    return Ok(Stmt::Opaque(self.span_from(start)));
                }
                "synchronized" if self.is_at(1, "(") => {
                    self.bump();
                    let lock = self.paren_expr()?;
                    let body = self.block()?;
                    return Ok(Stmt::Synchronized(lock, body, self.span_from(start)));
                }
                "assert" => {
                    self.skip_to_semicolon()?;
                    return Ok(Stmt::Opaque(self.span_from(start)));
                }
                "else" | "catch" | "finally" | "case" => {
                    return self.error(format!("unexpected {}", self.found()));
                }
                _ => {}
            }
            if self.at_type_keyword() || (self.is("abstract") || self.is("static")) && self.is_at(1, "class") {
                while !self.is("{") {
                    if self.at_eof() {
                        return self.error("unterminated local type");
                    }
                    self.bump();
                }
                self.skip_balanced("{", "}")?;
                return Ok(Stmt::Opaque(self.span_from(start)));
            }
            if self.is_ident(0) && self.is_at(1, ":") {
                self.pos += 2;
                let inner = self.statement()?;
                return Ok(Stmt::Labeled(Box::new(inner), self.span_from(start)));
            }
        }
        if let Some(decl) = self.attempt(|p| p.local_var_head(start)) {
            let v = self.local_var_rest(start, decl.0, decl.1)?;
            self.expect(";")?;
            let mut v = v;
            v.span = self.span_from(start);
            return Ok(Stmt::LocalVar(v));
        }
        let e = self.expr()?;
        self.expect(";")?;
        Ok(Stmt::Expr(e, self.span_from(start)))
    }

    /// `[modifiers] Type name` followed by a declarator continuation.
    fn local_var_head(&mut self, _start: usize) -> PResult<(String, usize)> {
        self.modifiers()?;
        let ty = self.parse_type()?;
        if !self.is_ident(0) {
            return self.error("expected variable name");
        }
        if !(self.is_at(1, "=") || self.is_at(1, ";") || self.is_at(1, ",") || self.is_at(1, "[") || self.is_at(1, ":"))
        {
            return self.error("not a declaration");
        }
        Ok((ty, self.pos))
    }

    fn local_var_rest(&mut self, start: usize, ty: String, _first: usize) -> PResult<LocalVar> {
        let mut declarators = Vec::new();
        let mut decl_start = start;
        loop {
            let name = self.ident()?;
            while self.is("[") && self.is_at(1, "]") {
                self.pos += 2;
            }
            let init = if self.eat("=") {
                Some(if self.is("{") { self.array_init()? } else { self.expr()? })
            } else {
                None
            };
            declarators.push(Declarator {
                name,
                init,
                span: self.span_from(decl_start),
            });
            if !self.eat(",") {
                break;
            }
            decl_start = self.pos;
        }
        Ok(LocalVar {
            ty,
            declarators,
            span: self.span_from(start),
        })
    }

    fn paren_expr(&mut self) -> PResult<Expr> {
        self.expect("(")?;
        let e = self.expr()?;
        self.expect(")")?;
        Ok(e)
    }

    fn if_stmt(&mut self) -> PResult<Stmt> {
        let start = self.pos;
        self.bump();
        let cond = self.paren_expr()?;
        let then = Box::new(self.statement()?);
        let otherwise = if self.eat("else") {
            Some(Box::new(self.statement()?))
        } else {
            None
        };
        Ok(Stmt::If {
            cond,
            then,
            otherwise,
            span: self.span_from(start),
        })
    }

    fn for_stmt(&mut self) -> PResult<Stmt> {
        let start = self.pos;
        self.bump();
        self.expect("(")?;
        let header_start = self.pos;
        let foreach = self.attempt(|p| {
            let vstart = p.pos;
            p.modifiers()?;
            let ty = p.parse_type()?;
            let name = p.ident()?;
            let nspan = p.span_from(vstart);
            p.expect(":")?;
            Ok(LocalVar {
                ty,
                declarators: vec![Declarator {
                    name,
                    init: None,
                    span: nspan,
                }],
                span: nspan,
            })
        });
        if let Some(var) = foreach {
            let iterable = self.expr()?;
            let header = self.span_from(header_start);
            self.expect(")")?;
            let body = Box::new(self.statement()?);
            return Ok(Stmt::ForEach {
                var,
                iterable,
                header,
                body,
                span: self.span_from(start),
            });
        }
        let mut init = Vec::new();
        if !self.is(";") {
            let istart = self.pos;
            if let Some((ty, first)) = self.attempt(|p| p.local_var_head(istart)) {
                init.push(ForInit::Var(self.local_var_rest(istart, ty, first)?));
            } else {
                loop {
                    init.push(ForInit::Expr(self.expr()?));
                    if !self.eat(",") {
                        break;
                    }
                }
            }
        }
        self.expect(";")?;
        let cond = if self.is(";") { None } else { Some(self.expr()?) };
        self.expect(";")?;
        let mut update = Vec::new();
        if !self.is(")") {
            loop {
                update.push(self.expr()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        let header = self.span_from(header_start);
        self.expect(")")?;
        let body = Box::new(self.statement()?);
        Ok(Stmt::For {
            init,
            cond,
            update,
            header,
            body,
            span: self.span_from(start),
        })
    }

    fn try_stmt(&mut self) -> PResult<Stmt> {
        let start = self.pos;
        self.bump();
        let mut resources = Vec::new();
        if self.eat("(") {
            while !self.eat(")") {
                let rstart = self.pos;
                if let Some((ty, first)) = self.attempt(|p| p.local_var_head(rstart)) {
                    resources.push(self.local_var_rest(rstart, ty, first)?);
                } else {
                    self.expr()?;
                }
                if !self.eat(";") && !self.is(")") {
                    return self.error(format!("expected `;` or `)`, found {}", self.found()));
                }
            }
        }
        let body = self.block()?;
        let mut catches = Vec::new();
        while self.is("catch") {
            let cstart = self.pos;
            self.bump();
            self.expect("(")?;
            self.modifiers()?;
            let mut types = vec![self.parse_type()?];
            while self.eat("|") {
                types.push(self.parse_type()?);
            }
            let name = self.ident()?;
            self.expect(")")?;
            let cbody = self.block()?;
            catches.push(CatchClause {
                types,
                name,
                body: cbody,
                span: self.span_from(cstart),
            });
        }
        let finally = if self.eat("finally") { Some(self.block()?) } else { None };
        if catches.is_empty() && finally.is_none() && resources.is_empty() {
            return self.error("`try` without `catch` or `finally`");
        }
        Ok(Stmt::Try {
            resources,
            body,
            catches,
            finally,
            span: self.span_from(start),
        })
    }

    // ---- expressions ---------------------------------------------------

    pub(crate) fn expr(&mut self) -> PResult<Expr> {
        let start = self.pos;
        if self.at_lambda() {
            return self.lambda(start);
        }
        let lhs = self.ternary()?;
        if let Some((op, n)) = self.assign_op() {
            self.pos += n;
            let rhs = if self.is("{") { self.array_init()? } else { self.expr()? };
            return Ok(Expr {
                kind: ExprKind::Assign(op),
                span: self.span_from(start),
                children: vec![lhs, rhs],
            });
        }
        Ok(lhs)
    }

    fn at_lambda(&self) -> bool {
        if self.is_ident(0) && self.is_at(1, "->") {
            return true;
        }
        if self.is("(") {
            if let Some(close) = self.matching_paren(self.pos) {
                let next = self.tok(close + 1);
                return next.kind == TokenKind::Punct && next.text(self.src) == "->";
            }
        }
        false
    }

    fn lambda(&mut self, start: usize) -> PResult<Expr> {
        if self.is("(") {
            self.skip_balanced("(", ")")?;
        } else {
            self.bump();
        }
        self.expect("->")?;
        if self.is("{") {
            self.skip_balanced("{", "}")?;
        } else {
            self.expr()?;
        }
        Ok(Expr::leaf(ExprKind::Opaque, self.span_from(start)))
    }

    fn assign_op(&self) -> Option<(String, usize)> {
        const SIMPLE: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="];
        if self.kind(0) != TokenKind::Punct {
            return None;
        }
        let t = self.peek_text(0);
        if SIMPLE.contains(&t) {
            return Some((t.to_string(), 1));
        }
        if t == ">" && self.adjacent(self.pos) {
            if self.is_at(1, ">=") {
                return Some((">>=".into(), 2));
            }
            if self.is_at(1, ">") && self.adjacent(self.pos + 1) && self.is_at(2, ">=") {
                return Some((">>>=".into(), 3));
            }
        }
        None
    }

    /// Binary operator at the cursor: (text, precedence, token count).
    fn binary_op(&self) -> Option<(String, u8, usize)> {
        if self.is("instanceof") {
            return Some(("instanceof".into(), 7, 1));
        }
        if self.kind(0) != TokenKind::Punct {
            return None;
        }
        let t = self.peek_text(0);
        if t == ">" {
            if self.adjacent(self.pos) && self.is_at(1, ">") {
                if self.adjacent(self.pos + 1) && self.is_at(2, ">") {
                    if self.adjacent(self.pos + 2) && self.is_at(3, ">=") {
                        return None;
                    }
                    return Some((">>>".into(), 8, 3));
                }
                if self.adjacent(self.pos + 1) && self.is_at(2, ">=") {
                    return None;
                }
                return Some((">>".into(), 8, 2));
            }
            if self.adjacent(self.pos) && self.is_at(1, ">=") {
                return None;
            }
            return Some((">".into(), 7, 1));
        }
        let prec = match t {
            "||" => 1,
            "&&" => 2,
            "|" => 3,
            "^" => 4,
            "&" => 5,
            "==" | "!=" => 6,
            "<" | "<=" | ">=" => 7,
            "<<" => 8,
            "+" | "-" => 9,
            "*" | "/" | "%" => 10,
            _ => return None,
        };
        Some((t.to_string(), prec, 1))
    }

    fn ternary(&mut self) -> PResult<Expr> {
        let start = self.pos;
        let cond = self.binary(1)?;
        if self.eat("?") {
            let a = self.expr()?;
            self.expect(":")?;
            let b = if self.at_lambda() {
                self.expr()?
            } else {
                self.ternary()?
            };
            return Ok(Expr {
                kind: ExprKind::Conditional,
                span: self.span_from(start),
                children: vec![cond, a, b],
            });
        }
        Ok(cond)
    }

    fn binary(&mut self, min_prec: u8) -> PResult<Expr> {
        let start = self.pos;
        let mut lhs = self.unary()?;
        while let Some((op, prec, n)) = self.binary_op() {
            if prec < min_prec {
                break;
            }
            self.pos += n;
            if op == "instanceof" {
                self.eat("final");
                let ty = self.parse_type()?;
                if self.is_ident(0) {
                    self.bump();
                }
                lhs = Expr {
                    kind: ExprKind::InstanceOf(ty),
                    span: self.span_from(start),
                    children: vec![lhs],
                };
                continue;
            }
            let rhs = self.binary(prec + 1)?;
            lhs = Expr {
                kind: ExprKind::Binary(op),
                span: self.span_from(start),
                children: vec![lhs, rhs],
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        let start = self.pos;
        for op in ["++", "--", "+", "-", "!", "~"] {
            if self.is(op) {
                self.bump();
                let operand = self.unary()?;
                return Ok(Expr {
                    kind: ExprKind::Unary(op.to_string()),
                    span: self.span_from(start),
                    children: vec![operand],
                });
            }
        }
        if self.is("(") {
            if let Some(ty) = self.attempt(|p| p.cast_head()) {
                let operand = self.unary()?;
                return Ok(Expr {
                    kind: ExprKind::Cast(ty),
                    span: self.span_from(start),
                    children: vec![operand],
                });
            }
        }
        self.postfix()
    }

    fn cast_head(&mut self) -> PResult<String> {
        self.expect("(")?;
        let primitive = PRIMITIVES.iter().any(|p| self.is(p));
        let ty = self.parse_type()?;
        while self.eat("&") {
            self.parse_type()?;
        }
        self.expect(")")?;
        let next_ok = primitive
            || self.is_ident(0)
            || matches!(
                self.kind(0),
                TokenKind::Int | TokenKind::Float | TokenKind::Str | TokenKind::Char
            )
            || ["(", "this", "new", "!", "~", "super", "true", "false", "null"]
                .iter()
                .any(|t| self.is(t));
        if !next_ok || self.at_lambda() && !self.is("(") {
            return self.error("not a cast");
        }
        Ok(ty)
    }

    fn args(&mut self) -> PResult<Vec<Expr>> {
        self.expect("(")?;
        let mut out = Vec::new();
        if !self.is(")") {
            loop {
                out.push(self.expr()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        Ok(out)
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let start = self.pos;
        let mut e = self.primary()?;
        loop {
            if self.is(".") {
                self.bump();
                if self.is("<") {
                    self.skip_balanced("<", ">")?;
                }
                if self.is("new") {
                    let inner = self.creator()?;
                    e = Expr {
                        kind: inner.kind,
                        span: self.span_from(start),
                        children: std::iter::once(e).chain(inner.children).collect(),
                    };
                    continue;
                }
                if self.kind(0) != TokenKind::Ident {
                    return self.error(format!("expected member name, found {}", self.found()));
                }
                let name = self.bump().text(self.src).to_string();
                if self.is("(") {
                    let args = self.args()?;
                    e = Expr {
                        kind: ExprKind::Call {
                            name,
                            has_receiver: true,
                        },
                        span: self.span_from(start),
                        children: std::iter::once(e).chain(args).collect(),
                    };
                } else if name == "class" {
                    e = Expr {
                        kind: ExprKind::ClassLiteral(e.span.text(self.src).to_string()),
                        span: self.span_from(start),
                        children: Vec::new(),
                    };
                } else {
                    e = Expr {
                        kind: ExprKind::Field(name),
                        span: self.span_from(start),
                        children: vec![e],
                    };
                }
            } else if self.is("[") {
                self.bump();
                let idx = self.expr()?;
                self.expect("]")?;
                e = Expr {
                    kind: ExprKind::Index,
                    span: self.span_from(start),
                    children: vec![e, idx],
                };
            } else if self.is("++") || self.is("--") {
                let op = self.bump().text(self.src).to_string();
                e = Expr {
                    kind: ExprKind::Postfix(op),
                    span: self.span_from(start),
                    children: vec![e],
                };
            } else if self.is("::") {
                self.bump();
                self.bump();
                e = Expr::leaf(ExprKind::Opaque, self.span_from(start));
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        let start = self.pos;
        match self.kind(0) {
            TokenKind::Int | TokenKind::Float | TokenKind::Str | TokenKind::Char => {
                let s = self.bump();
                return Ok(Expr::leaf(ExprKind::Literal, s));
            }
            TokenKind::Eof => return self.error("expected expression, found end of file"),
            _ => {}
        }
        if self.is("(") {
            self.bump();
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(Expr {
                kind: ExprKind::Paren,
                span: self.span_from(start),
                children: vec![inner],
            });
        }
        if self.is("{") {
            return self.array_init();
        }
        if self.kind(0) != TokenKind::Ident {
            return self.error(format!("expected expression, found {}", self.found()));
        }
        match self.peek_text(0) {
            "true" | "false" | "null" => {
                let s = self.bump();
                Ok(Expr::leaf(ExprKind::Literal, s))
            }
            "this" | "super" => {
                let is_this = self.is("this");
                let s = self.bump();
                if self.is("(") {
                    // explicit constructor invocation
                    let args = self.args()?;
                    return Ok(Expr {
                        kind: ExprKind::Paren,
                        span: self.span_from(start),
                        children: args,
                    });
                }
                Ok(Expr::leaf(if is_this { ExprKind::This } else { ExprKind::Super }, s))
            }
            "new" => self.creator(),
            "switch" => {
                self.bump();
                self.paren_expr()?;
                self.skip_balanced("{", "}")?;
                Ok(Expr::leaf(ExprKind::Opaque, self.span_from(start)))
            }
            t if PRIMITIVES.contains(&t) => {
                let ty = self.parse_type()?;
                self.expect(".")?;
                self.expect("class")?;
                Ok(Expr::leaf(ExprKind::ClassLiteral(ty), self.span_from(start)))
            }
            _ => {
                if !self.is_ident(0) {
                    return self.error(format!("expected expression, found {}", self.found()));
                }
                let name = self.bump().text(self.src).to_string();
                if self.is("(") {
                    let args = self.args()?;
                    return Ok(Expr {
                        kind: ExprKind::Call {
                            name,
                            has_receiver: false,
                        },
                        span: self.span_from(start),
                        children: args,
                    });
                }
                // array type class literal: Foo[].class
                if self.is("[") && self.is_at(1, "]") {
                    while self.is("[") && self.is_at(1, "]") {
                        self.pos += 2;
                    }
                    self.expect(".")?;
                    self.expect("class")?;
                    return Ok(Expr::leaf(ExprKind::ClassLiteral(name), self.span_from(start)));
                }
                Ok(Expr::leaf(ExprKind::Name(name), self.span_from(start)))
            }
        }
    }

    fn creator(&mut self) -> PResult<Expr> {
        let start = self.pos;
        self.expect("new")?;
        if self.is("<") {
            self.skip_balanced("<", ">")?;
        }
        let mut parts: Vec<&'a str> = Vec::new();
        while self.is("@") {
            self.annotation()?;
        }
        if !(self.is_ident(0) || PRIMITIVES.iter().any(|p| self.is(p))) {
            return self.error(format!("expected type after `new`, found {}", self.found()));
        }
        parts.push(self.bump().text(self.src));
        loop {
            if self.is("<") {
                self.type_args(&mut parts)?;
            }
            if self.is(".") && self.is_ident(1) {
                parts.push(self.bump().text(self.src));
                parts.push(self.bump().text(self.src));
            } else {
                break;
            }
        }
        let ty = join_type_tokens(&parts);
        if self.is("[") {
            let mut children = Vec::new();
            while self.is("[") {
                self.bump();
                if !self.is("]") {
                    children.push(self.expr()?);
                }
                self.expect("]")?;
            }
            if self.is("{") {
                children.push(self.array_init()?);
            }
            return Ok(Expr {
                kind: ExprKind::NewArray(ty),
                span: self.span_from(start),
                children,
            });
        }
        let args = self.args()?;
        if self.is("{") {
            self.skip_balanced("{", "}")?;
        }
        Ok(Expr {
            kind: ExprKind::New(ty),
            span: self.span_from(start),
            children: args,
        })
    }

    fn array_init(&mut self) -> PResult<Expr> {
        let start = self.pos;
        self.expect("{")?;
        let mut children = Vec::new();
        while !self.is("}") {
            children.push(if self.is("{") { self.array_init()? } else { self.expr()? });
            if !self.eat(",") {
                break;
            }
        }
        self.expect("}")?;
        Ok(Expr {
            kind: ExprKind::ArrayInit,
            span: self.span_from(start),
            children,
        })
    }
}

enum Member {
    Method(MethodDecl),
    #[allow(dead_code)]
    Type(TypeDecl),
    Other,
}

fn is_word(t: &str) -> bool {
    t.chars()
        .next()
        .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '$')
}

fn join_type_tokens(parts: &[&str]) -> String {
    let mut out = String::new();
    let mut prev: Option<&str> = None;
    for &p in parts {
        if let Some(q) = prev {
            if is_word(p) && (is_word(q) || q == "?") {
                out.push(' ');
            }
        }
        out.push_str(p);
        prev = Some(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> CompilationUnit {
        parse_source(src, "T.java").unwrap_or_else(|d| panic!("{d}"))
    }

    fn body(src: &str) -> Vec<Stmt> {
        let unit = parse(&format!("class T {{ void f() {{ {src} }} }}"));
        unit.types[0].methods[0].body.clone().unwrap().stmts
    }

    #[test]
    fn minimal_free_method() {
        let unit = parse("public void f(){}");
        assert_eq!(unit.free_methods.len(), 1);
        assert!(unit.free_methods[0].body.as_ref().unwrap().stmts.is_empty());
    }

    #[test]
    fn malformed_if_body_is_an_error() {
        let d = parse_source("public void f(){ if(x) }", "T.java").unwrap_err();
        assert_eq!(d.line, 1);
        assert_eq!(d.column, 24);
        assert!(d.message.contains("expected expression"), "{}", d.message);
    }

    #[test]
    fn signatures_include_param_types() {
        let unit = parse("class A { int g(Map<String, List<Integer>> m, int... xs) { return 0; } A() {} }");
        let sigs: Vec<String> = unit.types[0].methods.iter().map(|m| m.signature()).collect();
        assert_eq!(sigs, ["g(Map<String,List<Integer>>,int...)", "A()"]);
    }

    #[test]
    fn declarations_versus_expressions() {
        let stmts = body("List<String> xs = new ArrayList<>(); a.b = c; i++; x[i] = 3; int[] r = null, q;");
        assert!(matches!(stmts[0], Stmt::LocalVar(ref v) if v.ty == "List<String>"));
        assert!(matches!(stmts[1], Stmt::Expr(..)));
        assert!(matches!(stmts[2], Stmt::Expr(..)));
        assert!(matches!(stmts[3], Stmt::Expr(..)));
        assert!(matches!(stmts[4], Stmt::LocalVar(ref v) if v.ty == "int[]" && v.declarators.len() == 2));
    }

    #[test]
    fn shifts_and_generics() {
        let stmts =
            body("int a = b >> 2; int c = d >>> e; x >>= 1; Map<K, List<V>> m = null; boolean z = p < q && r > s;");
        assert_eq!(stmts.len(), 5);
        match &stmts[0] {
            Stmt::LocalVar(v) => assert!(matches!(
                v.declarators[0].init.as_ref().unwrap().kind,
                ExprKind::Binary(ref op) if op == ">>"
            )),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loops_and_try() {
        let stmts = body(
            "for (int i=0; i<n; i++) {} for (String s : names) {} do { x(); } while (y);\
             try (Reader r = open()) { r.read(); } catch (IOException | RuntimeException e) { log(e); } finally { close(); }",
        );
        assert!(matches!(stmts[0], Stmt::For { .. }));
        assert!(matches!(stmts[1], Stmt::ForEach { .. }));
        assert!(matches!(stmts[2], Stmt::DoWhile { .. }));
        match &stmts[3] {
            Stmt::Try { catches, resources, .. } => {
                assert_eq!(resources.len(), 1);
                assert_eq!(catches[0].types, ["IOException", "RuntimeException"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unsupported_statements_are_opaque() {
        let stmts = body("switch (k) { case 1: foo(); break; default: bar(); } assert x : \"m\"; g();");
        assert!(matches!(stmts[0], Stmt::Opaque(_)));
        assert!(matches!(stmts[1], Stmt::Opaque(_)));
        assert!(matches!(stmts[2], Stmt::Expr(..)));
    }

    #[test]
    fn casts_lambdas_and_anonymous_classes() {
        let stmts = body(
            "Object o = (String) x; int n = (int) -y; int m = (a) + b; run(() -> go()); \
             list.forEach(s -> { print(s); }); Runnable r = new Runnable() { public void run() {} };",
        );
        assert_eq!(stmts.len(), 6);
        match &stmts[2] {
            Stmt::LocalVar(v) => assert!(matches!(
                v.declarators[0].init.as_ref().unwrap().kind,
                ExprKind::Binary(_)
            )),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classes_enums_and_fields() {
        let unit = parse(
            "package p; import java.util.*; @Deprecated public class A extends B implements C<D> {\
               private static final int X = 1; int[] ys = {1, 2};\
               enum E { P(1) { void q() {} }, R; void s() {} }\
               static { init(); }\
               public <T> T id(T t) { return t; }\
               abstract void h();\
               interface I { default void k() { } }\
             }",
        );
        let names: Vec<String> = unit.methods().iter().map(|(c, m)| format!("{c}.{}", m.name)).collect();
        assert_eq!(names, ["A.id", "A.h", "A.E.s", "A.I.k"]);
    }
}
