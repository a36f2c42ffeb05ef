package org.eclipse.jdt.internal.compiler.parser;

public class Parser {

    public void checkComment() {
        // discard obsolete comments while inside methods or fields initializer
        if (!(this.diet && this.dietInt==0) && this.scanner.commentPtr >= 0) {
            flushCommentsDefinedPriorTo(this.endStatementPosition);
        }
        int lastComment = this.scanner.commentPtr;
        if (this.modifiersSourceStart >= 0) {
            // eliminate comments located after modifierSourceStart if positioned
            while (lastComment >= 0) {
                int commentSourceStart = this.scanner.commentStarts[lastComment];
                if (commentSourceStart < 0) commentSourceStart = -commentSourceStart;
                if (commentSourceStart <= this.modifiersSourceStart) break;
                lastComment--;
            }
        }
        if (lastComment >= 0) {
            this.modifiersSourceStart = this.scanner.commentStarts[0];

            while (lastComment >= 0 && this.scanner.commentStops[lastComment] < 0) lastComment--;
            if (lastComment >= 0 && this.javadocParser != null) {
                if (this.javadocParser.checkDeprecation(
                        this.scanner.commentStarts[lastComment],
                        this.scanner.commentStops[lastComment] - 1)) {
                    checkAndSetModifiers(AccDeprecated);
                }
                this.javadoc = this.javadocParser.docComment;
            }
        }
    }

    protected void flushCommentsDefinedPriorTo(int position) {
        int lastCommentIndex = this.scanner.commentPtr;
        if (lastCommentIndex < 0) return;
        int index = lastCommentIndex;
        int validCount = 0;
        while (index >= 0) {
            int commentEnd = this.scanner.commentStops[index];
            if (commentEnd < 0) commentEnd = -commentEnd;
            if (commentEnd <= position) {
                break;
            }
            index--;
            validCount++;
        }
        if (validCount > 0) {
            int immediateCommentEnd = -this.scanner.commentStops[index+1];
            if (immediateCommentEnd > 0) {
                immediateCommentEnd--;
                if (Util.getLineNumber(position, this.scanner.lineEnds, 0, this.scanner.linePtr)
                        == Util.getLineNumber(immediateCommentEnd, this.scanner.lineEnds, 0, this.scanner.linePtr)) {
                    position = immediateCommentEnd;
                    validCount--;
                }
            }
        }
        if (index < 0) return;
        switch (validCount) {
            case 0:
                break;
            default:
                System.arraycopy(this.scanner.commentStarts, index + 1, this.scanner.commentStarts, 0, validCount);
                System.arraycopy(this.scanner.commentStops, index + 1, this.scanner.commentStops, 0, validCount);
        }
        this.scanner.commentPtr = validCount - 1;
    }
}
