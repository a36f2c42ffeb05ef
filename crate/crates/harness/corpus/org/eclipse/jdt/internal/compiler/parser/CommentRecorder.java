package org.eclipse.jdt.internal.compiler.parser;

public class CommentRecorder {
    public void checkComment() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.modifiersSourceStart >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.modifiersSourceStart) break;
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

    public void checkLeadingComment() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.leadingStart >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.leadingStart) break;
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

    public void checkTrailingComment() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.trailingStart >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.trailingStart) break;
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

    public void checkLastComment() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.lastStart >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.lastStart) break;
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

    public void checkHeadComment() {
        if (!(this.diet && this.dietInt == 0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int last = this.scanner.commentPtr;
        if (this.headStart >= 0) {
            while (last >= 0) {
                int start = this.scanner.commentStarts[last];
                if (start < 0) start = -start;
                if (start <= this.headStart) break;
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
}
