use super::Span;

#[derive(Debug, Clone, Default)]
pub struct CompilationUnit {
    pub types: Vec<TypeDecl>,
    /// Methods written outside any type declaration (accepted for snippets).
    pub free_methods: Vec<MethodDecl>,
}

impl CompilationUnit {
    /// All methods in declaration order, paired with their enclosing type
    /// path (`Outer.Inner`, empty for free methods).
    pub fn methods(&self) -> Vec<(String, &MethodDecl)> {
        fn walk<'a>(t: &'a TypeDecl, prefix: &str, out: &mut Vec<(String, &'a MethodDecl)>) {
            let path = if prefix.is_empty() {
                t.name.clone()
            } else {
                format!("{prefix}.{}", t.name)
            };
            for m in &t.methods {
                out.push((path.clone(), m));
            }
            for n in &t.nested {
                walk(n, &path, out);
            }
        }
        let mut out: Vec<(String, &MethodDecl)> = self.free_methods.iter().map(|m| (String::new(), m)).collect();
        for t in &self.types {
            walk(t, "", &mut out);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct TypeDecl {
    pub name: String,
    pub methods: Vec<MethodDecl>,
    pub nested: Vec<TypeDecl>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct MethodDecl {
    pub name: String,
    pub params: Vec<Param>,
    pub return_type: Option<String>,
    /// `None` for abstract and interface methods.
    pub body: Option<Block>,
    pub span: Span,
}

impl MethodDecl {
    /// `name(T1,T2)`: the overload-disambiguating signature.
    pub fn signature(&self) -> String {
        let tys: Vec<&str> = self.params.iter().map(|p| p.ty.as_str()).collect();
        format!("{}({})", self.name, tys.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct Param {
    pub ty: String,
    pub name: String,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct Block {
    pub stmts: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct Declarator {
    pub name: String,
    pub init: Option<Expr>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct LocalVar {
    pub ty: String,
    pub declarators: Vec<Declarator>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub enum ForInit {
    Var(LocalVar),
    Expr(Expr),
}

#[derive(Debug, Clone)]
pub struct CatchClause {
    /// Caught types; more than one for multi-catch.
    pub types: Vec<String>,
    pub name: String,
    pub body: Block,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub enum Stmt {
    Block(Block),
    LocalVar(LocalVar),
    If {
        cond: Expr,
        then: Box<Stmt>,
        otherwise: Option<Box<Stmt>>,
        span: Span,
    },
    While {
        cond: Expr,
        body: Box<Stmt>,
        span: Span,
    },
    DoWhile {
        body: Box<Stmt>,
        cond: Expr,
        span: Span,
    },
    For {
        init: Vec<ForInit>,
        cond: Option<Expr>,
        update: Vec<Expr>,
        /// Text between the header parentheses.
        header: Span,
        body: Box<Stmt>,
        span: Span,
    },
    ForEach {
        var: LocalVar,
        iterable: Expr,
        header: Span,
        body: Box<Stmt>,
        span: Span,
    },
    Try {
        resources: Vec<LocalVar>,
        body: Block,
        catches: Vec<CatchClause>,
        finally: Option<Block>,
        span: Span,
    },
    Return(Option<Expr>, Span),
    Throw(Expr, Span),
    Expr(Expr, Span),
    Synchronized(Expr, Block, Span),
    Labeled(Box<Stmt>, Span),
    /// `break`, `continue`, `;`.
    Jump(Span),
    /// Unsupported statement kept for span accounting only.
    Opaque(Span),
}

impl Stmt {
    pub fn span(&self) -> Span {
        match self {
            Stmt::Block(b) => b.span,
            Stmt::LocalVar(v) => v.span,
            Stmt::If { span, .. }
            | Stmt::While { span, .. }
            | Stmt::DoWhile { span, .. }
            | Stmt::For { span, .. }
            | Stmt::ForEach { span, .. }
            | Stmt::Try { span, .. } => *span,
            Stmt::Return(_, s)
            | Stmt::Throw(_, s)
            | Stmt::Expr(_, s)
            | Stmt::Synchronized(_, _, s)
            | Stmt::Labeled(_, s)
            | Stmt::Jump(s)
            | Stmt::Opaque(s) => *s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Name(String),
    Literal,
    This,
    Super,
    Field(String),
    /// Method invocation; children are `[receiver?, args...]`.
    Call {
        name: String,
        has_receiver: bool,
    },
    New(String),
    NewArray(String),
    Index,
    Unary(String),
    Postfix(String),
    Binary(String),
    Assign(String),
    Conditional,
    Cast(String),
    InstanceOf(String),
    ArrayInit,
    Paren,
    ClassLiteral(String),
    /// Lambda or method reference; contents are not analysed.
    Opaque,
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
    pub children: Vec<Expr>,
}

impl Expr {
    pub fn leaf(kind: ExprKind, span: Span) -> Self {
        Expr {
            kind,
            span,
            children: Vec::new(),
        }
    }
}
