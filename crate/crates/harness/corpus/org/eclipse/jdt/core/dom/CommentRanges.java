package org.eclipse.jdt.core.dom;

public class CommentRanges {
    public int[] rangeOfLeading(ASTNode node) {
        int[] range = null;
        if (this.leadingPtr >= 0) {
            for (int i = 0; range == null && i <= this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node) range = this.leadingIndexes[i];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }

    public int[] rangeOfTrailing(ASTNode node) {
        int[] range = null;
        if (this.trailingPtr >= 0) {
            for (int j = 0; range == null && j <= this.trailingPtr; j++) {
                if (this.trailingNodes[j] == node) range = this.trailingIndexes[j];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }

    public int[] rangeOfJavadoc(ASTNode node) {
        int[] range = null;
        if (this.javadocPtr >= 0) {
            for (int k = 0; range == null && k <= this.javadocPtr; k++) {
                if (this.javadocNodes[k] == node) range = this.javadocIndexes[k];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }

    public int[] rangeOfLine(ASTNode node) {
        int[] range = null;
        if (this.linePtr >= 0) {
            for (int n = 0; range == null && n <= this.linePtr; n++) {
                if (this.lineNodes[n] == node) range = this.lineIndexes[n];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }

    public int[] rangeOfBlock(ASTNode node) {
        int[] range = null;
        if (this.blockPtr >= 0) {
            for (int p = 0; range == null && p <= this.blockPtr; p++) {
                if (this.blockNodes[p] == node) range = this.blockIndexes[p];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            this.scratch = new Comment[length];
        }
        return range;
    }
}
