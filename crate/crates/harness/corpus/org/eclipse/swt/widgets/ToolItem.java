package org.eclipse.swt.widgets;

public class ToolItem {
    public Font getFont() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return font;
    }

    public Color getBackground() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return background;
    }

    public Color getForeground() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return foreground;
    }

    public Image getImage() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return image;
    }

    public String getText() {
        checkWidget();
        if (!parent.checkData(this, true)) {
            return null;
        }
        error(SWT.ERROR_WIDGET_DISPOSED);
        return text;
    }
}
