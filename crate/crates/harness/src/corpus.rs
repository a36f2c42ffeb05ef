//! The bundled synthetic corpus: five groups of similar methods, clusters of
//! renamed near-miss twins for each group, and unrelated filler methods.
//!
//! Everything is generated from the templates below; `corpus/` in this crate
//! is the committed output of [`write_corpus`].

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::manifest::{GroundTruthGroup, Manifest};

/// One generated source file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: String,
    pub text: String,
}

/// A method text copied once per entry of `names`. `$M` is replaced by the
/// name and every placeholder in `vars` by its value for that copy.
struct Template {
    names: &'static [&'static str],
    vars: &'static [(&'static str, &'static [&'static str])],
    text: &'static str,
}

impl Template {
    fn render(&self) -> Vec<String> {
        (0..self.names.len())
            .map(|i| {
                let mut out = self.text.replace("$M", self.names[i]);
                // longest placeholders first so `$ab` is not clobbered by `$a`
                let mut vars: Vec<_> = self.vars.iter().collect();
                vars.sort_by_key(|(ph, _)| std::cmp::Reverse(ph.len()));
                for (ph, values) in vars {
                    out = out.replace(ph, values[i % values.len()]);
                }
                out
            })
            .collect()
    }
}

/// Look-alike methods that are not part of a group, in their own file.
struct NearMiss {
    file: &'static str,
    class: &'static str,
    template: Template,
}

struct Group {
    name: &'static str,
    file: &'static str,
    class: &'static str,
    members: Template,
    /// Members written out by hand, usually lacking a feature the
    /// templated ones share.
    variants: &'static [&'static str],
    near_misses: &'static [NearMiss],
}

pub const TWINS: usize = 5;

const IDX: (&str, &[&str]) = ("$i", &["i", "j", "k", "n", "p"]);

const GROUPS: &[Group] = &[
    Group {
        name: "comment-ranges",
        file: "org/eclipse/jdt/core/dom/DefaultCommentMapper.java",
        class: "DefaultCommentMapper",
        members: Template {
            names: &[
                "getLeadingComments",
                "getTrailingComments",
                "getJavadocComments",
                "getLineComments",
                "getBlockComments",
            ],
            vars: &[
                (
                    "$F",
                    &["leadingPtr", "trailingPtr", "javadocPtr", "linePtr", "blockPtr"],
                ),
                (
                    "$G",
                    &[
                        "leadingNodes",
                        "trailingNodes",
                        "javadocNodes",
                        "lineNodes",
                        "blockNodes",
                    ],
                ),
                (
                    "$H",
                    &[
                        "leadingIndexes",
                        "trailingIndexes",
                        "javadocIndexes",
                        "lineIndexes",
                        "blockIndexes",
                    ],
                ),
                ("$a", &["node", "node", "target", "node", "key"]),
                ("$b", &["range", "range", "span", "bounds", "found"]),
                ("$c", &["length", "size", "length", "count", "total"]),
                ("$d", &["leadComments", "trailComments", "docs", "lines", "blocks"]),
                IDX,
            ],
            text: r#"    public Comment[] $M(ASTNode $a) {
        if (this.$F >= 0) {
            int[] $b = null;
            for (int $i = 0; $b == null && $i <= this.$F; $i++) {
                if (this.$G[$i] == $a) $b = this.$H[$i];
            }
            if ($b != null) {
                int $c = $b[1] - $b[0] + 1;
                Comment[] $d = new Comment[$c];
                System.arraycopy(this.comments, $b[0], $d, 0, $c);
                return $d;
            }
        }
        return null;
    }
"#,
        },
        variants: &[r#"    public Comment[] getExtendedComments(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                System.arraycopy(this.comments, range[0], this.scratch, 0, range[1] - range[0] + 1);
                return this.scratch;
            }
        }
        return null;
    }
"#],
        near_misses: &[
            NearMiss {
                file: "org/eclipse/jdt/core/dom/CommentProbe.java",
                class: "CommentProbe",
                template: Template {
                    names: &[
                        "probeExtended",
                        "probeLeading",
                        "probeTrailing",
                        "probeJavadoc",
                        "probeBlock",
                    ],
                    vars: &[],
                    text: r#"    public Comment[] $M(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/jdt/core/dom/CommentSlice.java",
                class: "CommentSlice",
                template: Template {
                    names: &[
                        "sliceLeading",
                        "sliceTrailing",
                        "sliceJavadoc",
                        "sliceLine",
                        "sliceBlock",
                    ],
                    vars: &[
                        (
                            "$F",
                            &["leadingPtr", "trailingPtr", "javadocPtr", "linePtr", "blockPtr"],
                        ),
                        (
                            "$G",
                            &[
                                "leadingNodes",
                                "trailingNodes",
                                "javadocNodes",
                                "lineNodes",
                                "blockNodes",
                            ],
                        ),
                        (
                            "$H",
                            &[
                                "leadingIndexes",
                                "trailingIndexes",
                                "javadocIndexes",
                                "lineIndexes",
                                "blockIndexes",
                            ],
                        ),
                        IDX,
                    ],
                    text: r#"    public Comment[] $M(ASTNode node) {
        int[] range = null;
        for (int $i = 0; range == null && $i <= this.$F; $i++) {
            if (this.$G[$i] == node) range = this.$H[$i];
        }
        if (this.$F >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/jdt/core/dom/CommentRanges.java",
                class: "CommentRanges",
                template: Template {
                    names: &[
                        "rangeOfLeading",
                        "rangeOfTrailing",
                        "rangeOfJavadoc",
                        "rangeOfLine",
                        "rangeOfBlock",
                    ],
                    vars: &[
                        (
                            "$F",
                            &["leadingPtr", "trailingPtr", "javadocPtr", "linePtr", "blockPtr"],
                        ),
                        (
                            "$G",
                            &[
                                "leadingNodes",
                                "trailingNodes",
                                "javadocNodes",
                                "lineNodes",
                                "blockNodes",
                            ],
                        ),
                        (
                            "$H",
                            &[
                                "leadingIndexes",
                                "trailingIndexes",
                                "javadocIndexes",
                                "lineIndexes",
                                "blockIndexes",
                            ],
                        ),
                        IDX,
                    ],
                    text: r#"    public int[] $M(ASTNode node) {
        int[] range = null;
        if (this.$F >= 0) {
            for (int $i = 0; range == null && $i <= this.$F; $i++) {
                if (this.$G[$i] == node) range = this.$H[$i];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/jdt/internal/compiler/parser/CommentRecorder.java",
                class: "CommentRecorder",
                template: Template {
                    names: &[
                        "checkComment",
                        "checkLeadingComment",
                        "checkTrailingComment",
                        "checkLastComment",
                        "checkHeadComment",
                    ],
                    vars: &[(
                        "$F",
                        &[
                            "modifiersSourceStart",
                            "leadingStart",
                            "trailingStart",
                            "lastStart",
                            "headStart",
                        ],
                    )],
                    text: r#"    public void $M() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.$F >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.$F) break;
                last--;
            }
        }
        if (last >= 0 && this.javadocParser != null) {
            if (this.javadocParser.checkDeprecation(last)) {
                checkAndSetModifiers(AccDeprecated);
            }
            this.javadoc = this.javadocParser.docComment;
        }
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/jdt/core/dom/CommentLookup.java",
                class: "CommentLookup",
                template: Template {
                    names: &[
                        "lookupLeading",
                        "lookupTrailing",
                        "lookupJavadoc",
                        "lookupLine",
                        "lookupBlock",
                    ],
                    vars: &[
                        (
                            "$F",
                            &["leadingPtr", "trailingPtr", "javadocPtr", "linePtr", "blockPtr"],
                        ),
                        (
                            "$G",
                            &[
                                "leadingNodes",
                                "trailingNodes",
                                "javadocNodes",
                                "lineNodes",
                                "blockNodes",
                            ],
                        ),
                        (
                            "$H",
                            &[
                                "leadingIndexes",
                                "trailingIndexes",
                                "javadocIndexes",
                                "lineIndexes",
                                "blockIndexes",
                            ],
                        ),
                        IDX,
                    ],
                    text: r#"    public Comment[] $M(ASTNode node) {
        int[] range = null;
        if (this.$F >= 0) {
            for (int $i = 0; range == null && $i <= this.$F; $i++) {
                if (this.$G[$i].equals(node)) range = this.$H[$i];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/jdt/core/dom/CommentIndex.java",
                class: "CommentIndex",
                template: Template {
                    names: &[
                        "indexOfLeading",
                        "indexOfTrailing",
                        "indexOfJavadoc",
                        "indexOfLine",
                        "indexOfBlock",
                    ],
                    vars: &[
                        (
                            "$F",
                            &["leadingPtr", "trailingPtr", "javadocPtr", "linePtr", "blockPtr"],
                        ),
                        (
                            "$G",
                            &[
                                "leadingNodes",
                                "trailingNodes",
                                "javadocNodes",
                                "lineNodes",
                                "blockNodes",
                            ],
                        ),
                        IDX,
                    ],
                    text: r#"    public int $M(ASTNode node) {
        if (this.$F >= 0) {
            for (int $i = 0; $i < this.$F; $i++) {
                if (this.$G[$i] == node) return $i;
            }
        }
        return -1;
    }
"#,
                },
            },
        ],
    },
    Group {
        name: "checked-item-getters",
        file: "org/eclipse/swt/widgets/TableItem.java",
        class: "TableItem",
        members: Template {
            names: &["getFont", "getBackground", "getForeground", "getImage", "getText"],
            vars: &[
                ("$T", &["Font", "Color", "Color", "Image", "String"]),
                ("$f", &["font", "background", "foreground", "image", "text"]),
                ("$K", &["FONT", "BACKGROUND", "FOREGROUND", "IMAGE", "TEXT"]),
            ],
            text: r#"    public $T $M() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return $f != null ? $f : parent.inheritedValue(SWT.$K);
    }
"#,
        },
        variants: &[r#"    public Rectangle getBounds() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.inheritedValue(SWT.BOUNDS);
    }
"#],
        near_misses: &[
            NearMiss {
                file: "org/eclipse/swt/widgets/TrayItem.java",
                class: "TrayItem",
                template: Template {
                    names: &["getBounds", "getLocation", "getSize", "getClientArea", "getOrigin"],
                    vars: &[],
                    text: r#"    public Rectangle $M() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/swt/widgets/MenuItem.java",
                class: "MenuItem",
                template: Template {
                    names: &["getFont", "getBackground", "getForeground", "getImage", "getText"],
                    vars: &[
                        ("$T", &["Font", "Color", "Color", "Image", "String"]),
                        ("$f", &["font", "background", "foreground", "image", "text"]),
                        ("$K", &["FONT", "BACKGROUND", "FOREGROUND", "IMAGE", "TEXT"]),
                    ],
                    text: r#"    public $T $M() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return $f != null ? $f : defaults.$f;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/swt/widgets/ToolItem.java",
                class: "ToolItem",
                template: Template {
                    names: &["getFont", "getBackground", "getForeground", "getImage", "getText"],
                    vars: &[
                        ("$T", &["Font", "Color", "Color", "Image", "String"]),
                        ("$f", &["font", "background", "foreground", "image", "text"]),
                    ],
                    text: r#"    public $T $M() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return $f;
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/swt/widgets/TreeColumn.java",
                class: "TreeColumn",
                template: Template {
                    names: &["setFont", "setBackground", "setForeground", "setImage", "setText"],
                    vars: &[
                        ("$T", &["Font", "Color", "Color", "Image", "String"]),
                        ("$f", &["font", "background", "foreground", "image", "text"]),
                    ],
                    text: r#"    public void $M($T value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.$f = value;
        redraw();
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/swt/widgets/ListItem.java",
                class: "ListItem",
                template: Template {
                    names: &["getFont", "getBackground", "getForeground", "getImage", "getText"],
                    vars: &[
                        ("$T", &["Font", "Color", "Color", "Image", "String"]),
                        ("$f", &["font", "background", "foreground", "image", "text"]),
                        ("$K", &["FONT", "BACKGROUND", "FOREGROUND", "IMAGE", "TEXT"]),
                    ],
                    text: r#"    public $T $M() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return $f != null ? $f : parent.$M();
    }
"#,
                },
            },
            NearMiss {
                file: "org/eclipse/swt/widgets/CoolItem.java",
                class: "CoolItem",
                template: Template {
                    names: &["getFont", "getBackground", "getForeground", "getImage", "getText"],
                    vars: &[
                        ("$T", &["Font", "Color", "Color", "Image", "String"]),
                        ("$f", &["font", "background", "foreground", "image", "text"]),
                        ("$K", &["FONT", "BACKGROUND", "FOREGROUND", "IMAGE", "TEXT"]),
                    ],
                    text: r#"    public $T $M() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return $f;
    }
"#,
                },
            },
        ],
    },
    Group {
        name: "buffered-line-readers",
        file: "org/example/io/LineFiles.java",
        class: "LineFiles",
        members: Template {
            names: &["readLines", "loadKeys", "readConfig", "loadHistory", "readManifest"],
            vars: &[
                ("$a", &["path", "file", "location", "name", "source"]),
                ("$d", &["lines", "keys", "entries", "history", "manifest"]),
                ("$r", &["reader", "in", "reader", "input", "br"]),
                ("$l", &["line", "next", "line", "entry", "text"]),
            ],
            text: r#"    public List<String> $M(String $a) {
        List<String> $d = new ArrayList<String>();
        try {
            BufferedReader $r = new BufferedReader(new FileReader($a));
            String $l = $r.readLine();
            while ($l != null) {
                $d.add($l.trim());
                $l = $r.readLine();
            }
            $r.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return $d;
    }
"#,
        },
        variants: &[r#"    public List<String> readRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader.close();
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }
"#],
        near_misses: &[
            NearMiss {
                file: "org/example/io/RawLines.java",
                class: "RawLines",
                template: Template {
                    names: &["collectRaw", "gatherRaw", "slurpRaw", "bufferRaw", "copyRaw"],
                    vars: &[],
                    text: r#"    public List<String> $M(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/io/LastLine.java",
                class: "LastLine",
                template: Template {
                    names: &["lastLine", "lastKey", "lastConfig", "lastHistory", "lastManifest"],
                    vars: &[("$a", &["path", "file", "location", "name", "source"])],
                    text: r#"    public List<String> $M(String $a) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader($a));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/io/Tokenizer.java",
                class: "Tokenizer",
                template: Template {
                    names: &[
                        "tokenizeLines",
                        "tokenizeKeys",
                        "tokenizeConfig",
                        "tokenizeHistory",
                        "tokenizeManifest",
                    ],
                    vars: &[("$a", &["path", "file", "location", "name", "source"])],
                    text: r#"    public List<String> $M(String $a) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader($a));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/io/ReadyReader.java",
                class: "ReadyReader",
                template: Template {
                    names: &[
                        "drainLines",
                        "drainKeys",
                        "drainConfig",
                        "drainHistory",
                        "drainManifest",
                    ],
                    vars: &[("$a", &["path", "file", "location", "name", "source"])],
                    text: r#"    public List<String> $M(String $a) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader($a));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/io/HeaderReader.java",
                class: "HeaderReader",
                template: Template {
                    names: &["readHeader", "readTitle", "readFirst", "readBanner", "readPreamble"],
                    vars: &[("$a", &["path", "file", "location", "name", "source"])],
                    text: r#"    public List<String> $M(String $a) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader($a));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/io/LineWriter.java",
                class: "LineWriter",
                template: Template {
                    names: &[
                        "writeLines",
                        "writeKeys",
                        "writeConfig",
                        "writeHistory",
                        "writeManifest",
                    ],
                    vars: &[("$a", &["path", "file", "location", "name", "source"])],
                    text: r#"    public void $M(String $a, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter($a));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }
"#,
                },
            },
        ],
    },
    Group {
        name: "expiring-map-sweeps",
        file: "org/example/cache/ExpiringCache.java",
        class: "ExpiringCache",
        members: Template {
            names: &["purgeExpired", "evictStale", "dropOld", "expireSessions", "sweepTokens"],
            vars: &[
                ("$a", &["now", "time", "clock", "now", "instant"]),
                ("$it", &["it", "iter", "cursor", "it", "entries"]),
                ("$e", &["entry", "e", "item", "session", "token"]),
                ("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"]),
                ("$T", &["timeout", "maxIdle", "ttl", "sessionTimeout", "tokenLifetime"]),
                ("$c", &["size", "count", "live", "active", "issued"]),
            ],
            text: r#"    public void $M(long $a) {
        Iterator<Map.Entry<String, Long>> $it = this.$S.entrySet().iterator();
        while ($it.hasNext()) {
            Map.Entry<String, Long> $e = $it.next();
            if ($a - $e.getValue() > this.$T) {
                $it.remove();
                this.$c--;
            }
        }
    }
"#,
        },
        variants: &[r#"    public void expireLeases(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                it.remove();
                this.leased--;
            }
        }
    }
"#],
        near_misses: &[
            NearMiss {
                file: "org/example/cache/LeaseCounter.java",
                class: "LeaseCounter",
                template: Template {
                    names: &["countLeases", "countStale", "countOld", "countSessions", "countTokens"],
                    vars: &[],
                    text: r#"    public void $M(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/cache/LazySweeper.java",
                class: "LazySweeper",
                template: Template {
                    names: &[
                        "sweepStamps",
                        "sweepAccess",
                        "sweepCreated",
                        "sweepSessions",
                        "sweepTokens",
                    ],
                    vars: &[("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"])],
                    text: r#"    public void $M(long now) {
        Iterator<Map.Entry<String, Long>> it = this.$S.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/cache/Snapshot.java",
                class: "Snapshot",
                template: Template {
                    names: &[
                        "snapshotStamps",
                        "snapshotAccess",
                        "snapshotCreated",
                        "snapshotSessions",
                        "snapshotTokens",
                    ],
                    vars: &[("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"])],
                    text: r#"    public void $M(long now) {
        Iterator<Map.Entry<String, Long>> it = this.$S.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/cache/StaleCounter.java",
                class: "StaleCounter",
                template: Template {
                    names: &["countExpired", "countStale", "countOld", "countIdle", "countDead"],
                    vars: &[("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"])],
                    text: r#"    public int $M(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.$S.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/cache/Clearer.java",
                class: "Clearer",
                template: Template {
                    names: &[
                        "clearStamps",
                        "clearAccess",
                        "clearCreated",
                        "clearSessions",
                        "clearTokens",
                    ],
                    vars: &[("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"])],
                    text: r#"    public void $M() {
        Iterator<Map.Entry<String, Long>> it = this.$S.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/cache/NullPruner.java",
                class: "NullPruner",
                template: Template {
                    names: &["pruneNulls", "pruneEmpty", "pruneMissing", "pruneUnset", "pruneBlank"],
                    vars: &[("$S", &["stamps", "lastAccess", "created", "sessions", "tokens"])],
                    text: r#"    public void $M() {
        Iterator<Map.Entry<String, Long>> it = this.$S.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }
"#,
                },
            },
        ],
    },
    Group {
        name: "quote-escapers",
        file: "org/example/text/Escapes.java",
        class: "Escapes",
        members: Template {
            names: &[
                "escapeQuotes",
                "quoteString",
                "escapeLiteral",
                "encodeJavaString",
                "escapeJson",
            ],
            vars: &[
                ("$s", &["s", "text", "value", "str", "json"]),
                ("$b", &["buf", "out", "sb", "result", "builder"]),
                ("$c", &["c", "ch", "c", "c", "next"]),
                IDX,
            ],
            text: r#"    public static String $M(String $s) {
        if ($s == null) return null;
        StringBuilder $b = new StringBuilder($s.length());
        for (int $i = 0; $i < $s.length(); $i++) {
            char $c = $s.charAt($i);
            if ($c == '"' || $c == '\\') {
                $b.append('\\');
            }
            $b.append($c);
        }
        return $b.toString();
    }
"#,
        },
        variants: &[r#"    public static String escapeNonNull(String s) {
        StringBuilder buf = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (c == '"' || c == '\\') {
                buf.append('\\');
            }
            buf.append(c);
        }
        return buf.toString();
    }
"#],
        near_misses: &[
            NearMiss {
                file: "org/example/text/RawEscapes.java",
                class: "RawEscapes",
                template: Template {
                    names: &["escapeRaw", "quoteRaw", "escapeChars", "encodeRaw", "escapeBare"],
                    vars: &[],
                    text: r#"    public static String $M(String s) {
        StringBuilder buf = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (c == '"' || c == '\\') {
                buf.append('\\');
            }
            buf.append(c);
        }
        return buf.substring(0);
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/text/Markers.java",
                class: "Markers",
                template: Template {
                    names: &["markQuotes", "markText", "markValue", "markName", "markLabel"],
                    vars: &[IDX],
                    text: r#"    public static String $M(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int $i = 0; $i < s.length(); $i++) {
            char ch = s.charAt($i);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/text/Quoting.java",
                class: "Quoting",
                template: Template {
                    names: &["quoteAll", "quoteText", "quoteValue", "quoteName", "quoteLabel"],
                    vars: &[IDX],
                    text: r#"    public static String $M(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int $i = 0; $i < s.length(); $i++) {
            char ch = s.charAt($i);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/text/Casing.java",
                class: "Casing",
                template: Template {
                    names: &["upperAll", "upperText", "upperValue", "upperName", "upperLabel"],
                    vars: &[IDX],
                    text: r#"    public static String $M(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int $i = 0; $i < s.length(); $i++) {
            char ch = s.charAt($i);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/text/Squeeze.java",
                class: "Squeeze",
                template: Template {
                    names: &["stripSpaces", "stripBlanks", "stripGaps", "stripPadding", "stripWhite"],
                    vars: &[IDX],
                    text: r#"    public static String $M(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int $i = 0; $i < s.length(); $i++) {
            char ch = s.charAt($i);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }
"#,
                },
            },
            NearMiss {
                file: "org/example/text/CharEscapes.java",
                class: "CharEscapes",
                template: Template {
                    names: &["escapeChars", "escapeArray", "escapeAll", "escapeEach", "escapeBytes"],
                    vars: &[],
                    text: r#"    public static String $M(String s) {
        StringBuilder out = new StringBuilder();
        for (char ch : s.toCharArray()) {
            if (ch == '"' || ch == '\\') {
                out.append('\\');
            }
            out.append(ch);
        }
        return out.substring(0);
    }
"#,
                },
            },
        ],
    },
];

fn package_of(path: &str) -> String {
    path.rsplit_once('/')
        .map(|(d, _)| d.replace('/', "."))
        .unwrap_or_default()
}

fn class_file(package: &str, class: &str, methods: &[String]) -> String {
    let mut out = String::new();
    if !package.is_empty() {
        let _ = writeln!(out, "package {package};\n");
    }
    let _ = writeln!(out, "public class {class} {{");
    for (i, m) in methods.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(m);
    }
    out.push_str("}\n");
    out
}

/// Filler vocabulary: nothing here occurs in the groups.
const FILL_CALLS: &[&str] = &[
    "layoutChildren",
    "updateBounds",
    "notifyListeners",
    "scheduleRepaint",
    "computeInsets",
    "releaseHandle",
    "flushCache",
    "resetState",
    "markDirty",
    "recalculate",
    "applyTheme",
    "detachPeer",
];
const FILL_TYPES: &[&str] = &[
    "long",
    "double",
    "Object",
    "Date",
    "Point",
    "Rectangle",
    "Widget",
    "Event",
];
const FILL_CONDS: &[&str] = &[
    "visible",
    "!enabled",
    "width > height",
    "count % 2 == 1",
    "isDirty()",
    "mode == MODE_FAST",
    "depth > limit",
    "hasFocus() && !disposed",
];
const FILL_LOOPS: &[&str] = &[
    "Widget child : children",
    "hasMoreWork()",
    "retries > 0",
    "Event ev : queue",
];
const FILL_VARS: &[&str] = &[
    "offset", "weight", "anchor", "origin", "area", "owner", "stamp", "extent",
];

fn filler_stmt(rng: &mut ChaCha8Rng, depth: usize, indent: &str, out: &mut String) {
    let choice = if depth >= 2 {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..5)
    };
    match choice {
        0 => {
            let _ = writeln!(out, "{indent}{}();", FILL_CALLS.choose(rng).unwrap());
        }
        1 => {
            let _ = writeln!(
                out,
                "{indent}{} {} = {}({});",
                FILL_TYPES.choose(rng).unwrap(),
                FILL_VARS.choose(rng).unwrap(),
                FILL_CALLS.choose(rng).unwrap(),
                FILL_VARS.choose(rng).unwrap()
            );
        }
        2 => {
            let _ = writeln!(out, "{indent}if ({}) {{", FILL_CONDS.choose(rng).unwrap());
            filler_block(rng, depth + 1, indent, out);
            let _ = writeln!(out, "{indent}}}");
        }
        3 => {
            let header = *FILL_LOOPS.choose(rng).unwrap();
            if header.contains(" : ") {
                let _ = writeln!(out, "{indent}for ({header}) {{");
            } else {
                let _ = writeln!(out, "{indent}while ({header}) {{");
            }
            filler_block(rng, depth + 1, indent, out);
            if !header.contains(" : ") && !header.contains('(') {
                let _ = writeln!(out, "{indent}    retries--;");
            }
            let _ = writeln!(out, "{indent}}}");
        }
        _ => {
            let _ = writeln!(out, "{indent}try {{");
            filler_block(rng, depth + 1, indent, out);
            let _ = writeln!(out, "{indent}}} catch (IllegalStateException failure) {{");
            let _ = writeln!(out, "{indent}    detachPeer();");
            let _ = writeln!(out, "{indent}}}");
        }
    }
}

fn filler_block(rng: &mut ChaCha8Rng, depth: usize, indent: &str, out: &mut String) {
    let inner = format!("{indent}    ");
    for _ in 0..rng.gen_range(1..=2) {
        filler_stmt(rng, depth, &inner, out);
    }
}

/// A random method over the filler vocabulary.
pub fn filler_method(rng: &mut ChaCha8Rng, name: &str) -> String {
    let mut out = format!("    void {name}() {{\n");
    for _ in 0..rng.gen_range(2..=5) {
        filler_stmt(rng, 0, "        ", &mut out);
    }
    out.push_str("    }\n");
    out
}

pub const FILLER_FILES: usize = 4;
pub const FILLER_PER_FILE: usize = 10;
const FILLER_SEED: u64 = 0x5eed_f11e;

fn filler_files(files: usize, per_file: usize, seed: u64, dir: &str) -> Vec<SourceFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..files)
        .map(|f| {
            let class = format!("Panel{f}");
            let methods: Vec<String> = (0..per_file)
                .map(|m| filler_method(&mut rng, &format!("refresh{m}")))
                .collect();
            source(&format!("{dir}/{class}.java"), &class, &methods)
        })
        .collect()
}

fn source(path: &str, class: &str, methods: &[String]) -> SourceFile {
    SourceFile {
        path: path.to_string(),
        text: class_file(&package_of(path), class, methods),
    }
}

/// The full corpus and its ground-truth manifest.
pub fn generate() -> (Vec<SourceFile>, Manifest) {
    let mut files = Vec::new();
    let mut groups = Vec::new();
    for g in GROUPS {
        let mut methods = g.members.render();
        methods.extend(g.variants.iter().map(|v| v.to_string()));
        let file = source(g.file, g.class, &methods);
        let members = facet_core::extract_source(&file.text, g.file)
            .expect("group templates parse")
            .iter()
            .map(|m| m.id().to_string())
            .collect();
        files.push(file);
        let mut paths = vec![g.file.to_string()];
        for nm in g.near_misses {
            debug_assert_eq!(nm.template.names.len(), TWINS);
            files.push(source(nm.file, nm.class, &nm.template.render()));
            paths.push(nm.file.to_string());
        }
        groups.push(GroundTruthGroup {
            name: g.name.to_string(),
            members,
            paths,
        });
    }
    files.extend(filler_files(
        FILLER_FILES,
        FILLER_PER_FILE,
        FILLER_SEED,
        "org/example/ui",
    ));
    files.sort_by(|a, b| a.path.cmp(&b.path));
    (files, Manifest { groups })
}

/// A repository of `methods` filler methods (20 per file) for timing runs.
pub fn performance_repository(methods: usize, seed: u64) -> Vec<SourceFile> {
    let per_file = 20;
    let mut files = filler_files(methods / per_file, per_file, seed, "perf");
    let rest = methods % per_file;
    if rest > 0 {
        let mut extra = filler_files(1, rest, seed ^ 1, "perf/tail");
        files.append(&mut extra);
    }
    files
}

pub fn write_files(dir: &Path, files: &[SourceFile]) -> io::Result<()> {
    for f in files {
        let path = dir.join(&f.path);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, &f.text)?;
    }
    Ok(())
}

/// Writes the corpus under `dir` and the manifest to `dir/groups.toml`.
pub fn write_corpus(dir: &Path) -> io::Result<()> {
    let (files, manifest) = generate();
    write_files(dir, &files)?;
    std::fs::write(dir.join("groups.toml"), manifest.to_toml())
}
